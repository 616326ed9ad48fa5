#include "wreath/wdln.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <set>

#include "wreath/errors.hpp"
#include "wreath/parallel.hpp"

namespace wreath {

namespace {

const Space kF;

std::vector<std::size_t> range(std::size_t lo, std::size_t hi) {
  std::vector<std::size_t> r;
  for (std::size_t i = lo; i < hi; ++i) r.push_back(i);
  return r;
}

std::string tuple_string(const std::vector<std::size_t>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

void require_size(const WdlNObject& o, std::size_t n, const char* what) {
  if (o.size() != n) {
    throw PreconditionFailure(std::string(what) + " needs " + std::to_string(n) +
                              " monads, got " + std::to_string(o.size()));
  }
}

// Shared driver for the sorting shuffles. pick chooses one out-of-order
// adjacent position among the candidates.
template <class Pick>
LinMap run_shuffle(const WdlNObject& o, std::vector<std::size_t> labels,
                   std::vector<std::size_t> ranks, Pick pick, const LinMap* start = nullptr) {
  if (labels.size() != ranks.size()) {
    throw ShapeMismatch("shuffle word and ranks differ in length");
  }
  for (std::size_t l : labels) {
    if (l >= o.size()) throw IndexOutOfRange("shuffle label " + std::to_string(l));
  }
  std::vector<std::size_t> sorted = ranks;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != range(0, ranks.size())) {
    throw PreconditionFailure("shuffle ranks are not a permutation");
  }
  const Space dom = o.carrier(labels);
  if (start && start->rows() != dom.dim()) {
    throw ShapeMismatch("shuffle of " + dom.to_string() + " after a map into " +
                        start->codomain().to_string());
  }
  LinMap acc = start ? start->reshape(start->domain(), dom) : LinMap::identity(dom, o.field());
  for (;;) {
    std::vector<std::size_t> candidates;
    for (std::size_t p = 0; p + 1 < labels.size(); ++p) {
      if (ranks[p] > ranks[p + 1]) candidates.push_back(p);
    }
    if (candidates.empty()) break;
    const std::size_t p = pick(candidates);
    const std::size_t a = labels[p];
    const std::size_t b = labels[p + 1];
    if (a <= b) {
      throw PreconditionFailure("no law moves s_" + std::to_string(a) + " past s_" +
                                std::to_string(b));
    }
    std::vector<std::size_t> left(labels.begin(), labels.begin() + p);
    std::vector<std::size_t> right(labels.begin() + p + 2, labels.end());
    acc = whisker_after(o.carrier(left), o.law(b, a), o.carrier(right), acc);
    std::swap(labels[p], labels[p + 1]);
    std::swap(ranks[p], ranks[p + 1]);
  }
  return acc.reshape(start ? start->domain() : dom, o.carrier(labels));
}

std::vector<std::size_t> stable_ranks(const std::vector<std::size_t>& word) {
  std::vector<std::size_t> order = range(0, word.size());
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return word[x] < word[y]; });
  std::vector<std::size_t> ranks(word.size());
  for (std::size_t r = 0; r < order.size(); ++r) ranks[order[r]] = r;
  return ranks;
}

// (x)_{i in [lo,hi)} s_i
Space span(const WdlNObject& o, std::size_t lo, std::size_t hi) {
  return o.carrier(range(lo, hi));
}

LinMap arrow(const WdlNObject& o, std::size_t host, const std::vector<std::size_t>& word,
             const std::vector<std::size_t>& ranks, bool host_on_left) {
  const Demimonad& h = o.monads[host];
  const std::vector<std::size_t> base(word.begin() + (host_on_left ? 1 : 0),
                                      word.end() - (host_on_left ? 0 : 1));
  const Space B = o.carrier(base);
  if (host_on_left) {
    // (rest (x) mu).shuffle.(eta (x) rest)
    const Space rest = o.carrier({base.begin(), base.end() - 1});
    return chain({whisker(rest, h.mul, kF), shuffle(o, word, ranks), whisker(kF, h.unit, B)})
        .reshape(B, B);
  }
  const Space rest = o.carrier({base.begin() + 1, base.end()});
  return chain({whisker(kF, h.mul, rest), shuffle(o, word, ranks), whisker(B, h.unit, kF)})
      .reshape(B, B);
}

LinMap lbar(const WdlNObject& o, std::size_t i, std::size_t j) {
  return lambda_bar(o.pair(i, j));
}

}  // namespace

const LinMap& WdlNObject::law(std::size_t i, std::size_t j) const {
  if (i >= j || j >= size()) {
    throw IndexOutOfRange("no law lambda_{" + std::to_string(i) + "," + std::to_string(j) +
                          "} among " + std::to_string(size()) + " monads");
  }
  return laws[i][j];
}

WeakDistributiveLaw WdlNObject::pair(std::size_t i, std::size_t j) const {
  return {monads[j], monads[i], law(i, j)};
}

Space WdlNObject::carrier() const { return carrier(range(0, size())); }

Space WdlNObject::carrier(const std::vector<std::size_t>& word) const {
  Space s;
  for (std::size_t i : word) {
    if (i >= size()) throw IndexOutOfRange("monad index " + std::to_string(i));
    s = s * monads[i].space;
  }
  return s;
}

WdlNObject WdlNObject::restrict(const std::vector<std::size_t>& indices) const {
  WdlNObject r;
  for (std::size_t a = 0; a < indices.size(); ++a) {
    if (indices[a] >= size() || (a && indices[a] <= indices[a - 1])) {
      throw IndexOutOfRange("restriction indices must increase within range");
    }
    r.monads.push_back(monads[indices[a]]);
  }
  r.laws.assign(indices.size(), std::vector<LinMap>(indices.size()));
  for (std::size_t a = 0; a < indices.size(); ++a) {
    for (std::size_t b = a + 1; b < indices.size(); ++b) {
      r.laws[a][b] = law(indices[a], indices[b]);
    }
  }
  return r;
}

WdlNObject flip_object(std::vector<Demimonad> monads) {
  WdlNObject o;
  o.monads = std::move(monads);
  const std::size_t n = o.monads.size();
  o.laws.assign(n, std::vector<LinMap>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      o.laws[i][j] = flip(o.monads[j].space, o.monads[i].space, o.monads[i].field());
    }
  }
  return o;
}

std::pair<LinMap, LinMap> yang_baxter_sides(const WdlNObject& o, std::size_t i, std::size_t j,
                                            std::size_t k) {
  const Space& si = o.monads[i].space;
  const Space& sj = o.monads[j].space;
  const Space& sk = o.monads[k].space;
  const LinMap& lij = o.law(i, j);
  const LinMap& lik = o.law(i, k);
  const LinMap& ljk = o.law(j, k);
  const Space dom = sk * sj * si;
  const Space cod = si * sj * sk;
  LinMap lhs = chain({whisker(kF, lij, sk), whisker(sj, lik, kF), whisker(kF, ljk, si)});
  LinMap rhs = chain({whisker(si, ljk, kF), whisker(kF, lik, sj), whisker(sk, lij, kF)});
  return {lhs.reshape(dom, cod), rhs.reshape(dom, cod)};
}

Report validate_object(const WdlNObject& o) {
  Report r("weak distributive object");
  r.set("monads", o.size());
  if (o.size() == 0) {
    r.add("nonempty", false, "no monads");
    return r;
  }
  for (std::size_t i = 0; i < o.size(); ++i) {
    r.merge("s_" + std::to_string(i), check_demimonad(o.monads[i]));
  }
  for (std::size_t i = 0; i < o.size(); ++i) {
    for (std::size_t j = i + 1; j < o.size(); ++j) {
      r.merge("lambda" + tuple_string({i, j}), check_wdl(o.pair(i, j)));
    }
  }
  for (std::size_t i = 0; i < o.size(); ++i) {
    for (std::size_t j = i + 1; j < o.size(); ++j) {
      for (std::size_t k = j + 1; k < o.size(); ++k) {
        auto [lhs, rhs] = yang_baxter_sides(o, i, j, k);
        r.add_equal("yang-baxter" + tuple_string({i, j, k}), lhs, rhs);
      }
    }
  }
  return r;
}

LinMap shuffle(const WdlNObject& o, const std::vector<std::size_t>& word) {
  return shuffle(o, word, stable_ranks(word));
}

LinMap shuffle(const WdlNObject& o, const std::vector<std::size_t>& word,
               const std::vector<std::size_t>& ranks) {
  return run_shuffle(o, word, ranks,
                     [](const std::vector<std::size_t>& c) { return c.front(); });
}

LinMap shuffle_after(const WdlNObject& o, const std::vector<std::size_t>& word,
                     const LinMap& g) {
  return run_shuffle(
      o, word, stable_ranks(word), [](const std::vector<std::size_t>& c) { return c.front(); },
      &g);
}

LinMap shuffle_random(const WdlNObject& o, const std::vector<std::size_t>& word,
                      std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return run_shuffle(o, word, stable_ranks(word), [&](const std::vector<std::size_t>& c) {
    return c[std::uniform_int_distribution<std::size_t>(0, c.size() - 1)(rng)];
  });
}

LinMap right_arrow(const WdlNObject& o, std::size_t p, std::size_t q) {
  require_size(o, 3, "right arrow");
  if (!((p == 1 && q == 2) || (p == 2 && q == 1))) {
    throw IndexOutOfRange("right arrow " + tuple_string({0, p, q}));
  }
  return arrow(o, 0, {0, p, q, 0}, {0, 2, 3, 1}, false);
}

LinMap left_arrow(const WdlNObject& o, std::size_t k, std::size_t l) {
  require_size(o, 3, "left arrow");
  if (!((k == 0 && l == 1) || (k == 1 && l == 0))) {
    throw IndexOutOfRange("left arrow " + tuple_string({k, l, 2}));
  }
  return arrow(o, 2, {2, k, l, 2}, {2, 0, 1, 3}, true);
}

ArrowIdempotents arrow_idempotents(const WdlNObject& o) {
  return {right_arrow(o, 1, 2), left_arrow(o, 0, 1)};
}

Report check_arrow_identities(const WdlNObject& o) {
  require_size(o, 3, "arrow identities");
  Report r("arrow idempotents");
  const Space& s0 = o.monads[0].space;
  const Space& s1 = o.monads[1].space;
  const Space& s2 = o.monads[2].space;
  const Space* sp[3] = {&s0, &s1, &s2};

  for (auto [p, q] : {std::pair<std::size_t, std::size_t>{1, 2}, {2, 1}}) {
    const std::string tag = tuple_string({0, p, q});
    const LinMap ra = right_arrow(o, p, q);
    r.add_equal("right arrow " + tag + " idempotent", compose(ra, ra), ra);
    const LinMap nb = whisker(kF, lbar(o, 0, p), *sp[q]);
    r.add_equal("right arrow " + tag + " absorbs lambda_bar on the right", compose(ra, nb), ra);
    r.add_equal("right arrow " + tag + " absorbs lambda_bar on the left", compose(nb, ra), ra);
    const LinMap l0p = whisker(kF, o.law(0, p), *sp[q]);
    r.add_equal("right arrow " + tag + " against lambda", compose(ra, l0p),
                compose(l0p, whisker(*sp[p], lbar(o, 0, q), kF)));
  }
  r.add_equal("right arrows intertwine",
              compose(right_arrow(o, 1, 2), whisker(s0, o.law(1, 2), kF)),
              compose(whisker(s0, o.law(1, 2), kF), right_arrow(o, 2, 1)));

  for (auto [k, l] : {std::pair<std::size_t, std::size_t>{0, 1}, {1, 0}}) {
    const std::string tag = tuple_string({k, l, 2});
    const LinMap la = left_arrow(o, k, l);
    r.add_equal("left arrow " + tag + " idempotent", compose(la, la), la);
    const LinMap nb = whisker(*sp[k], lbar(o, l, 2), kF);
    r.add_equal("left arrow " + tag + " absorbs lambda_bar on the right", compose(la, nb), la);
    r.add_equal("left arrow " + tag + " absorbs lambda_bar on the left", compose(nb, la), la);
    const LinMap ll2 = whisker(*sp[k], o.law(l, 2), kF);
    r.add_equal("left arrow " + tag + " against lambda", compose(la, ll2),
                compose(ll2, whisker(kF, lbar(o, k, 2), *sp[l])));
  }
  r.add_equal("left arrows intertwine",
              compose(left_arrow(o, 0, 1), whisker(kF, o.law(0, 1), s2)),
              compose(whisker(kF, o.law(0, 1), s2), left_arrow(o, 1, 0)));

  const auto [ra, la] = arrow_idempotents(o);
  const LinMap bar = compose(la, ra);
  r.add_equal("left.right = left.(lambda_bar_01 (x) s_2)", bar,
              compose(la, whisker(kF, lbar(o, 0, 1), s2)));
  r.add_equal("left.right = right.(s_0 (x) lambda_bar_12)", bar,
              compose(ra, whisker(s0, lbar(o, 1, 2), kF)));
  r.add_equal("left.right = right.left", bar, compose(ra, la));
  r.add_equal("lambda_bar_012 idempotent", compose(bar, bar), bar);
  r.set("rank lambda_bar_012", rank(bar));
  return r;
}

Report check_fused_laws(const WdlNObject& o) {
  require_size(o, 3, "fused laws");
  Report r("fused laws");
  const Space& s0 = o.monads[0].space;
  const Space& s1 = o.monads[1].space;
  const Space& s2 = o.monads[2].space;
  const auto [ra, la] = arrow_idempotents(o);

  const LinMap core1 = compose(whisker(s0, o.law(1, 2), kF), whisker(kF, o.law(0, 2), s1));
  const LinMap a1 = compose(ra, core1);
  r.add_equal("lambda_{01,2} via the right arrow", a1,
              compose(core1, whisker(s2, lbar(o, 0, 1), kF)));
  const WdlNObject c1 = functor_Ck(o, 1);
  r.add_equal("lambda_{01,2} is the law of C_1", c1.law(0, 1), a1);

  const LinMap core2 = compose(whisker(kF, o.law(0, 1), s2), whisker(s1, o.law(0, 2), kF));
  const LinMap a2 = compose(la, core2);
  r.add_equal("lambda_{0,12} via the left arrow", a2,
              compose(core2, whisker(kF, lbar(o, 1, 2), s0)));
  const WdlNObject c2 = functor_Ck(o, 2);
  r.add_equal("lambda_{0,12} is the law of C_2", c2.law(0, 1), a2);

  const Demimonad m1 = weak_wreath(c1.pair(0, 1)).d;
  const Demimonad m2 = weak_wreath(c2.pair(0, 1)).d;
  r.add_equal("induced mul agree", m1.mul, m2.mul);
  r.add_equal("induced unit agree", m1.unit, m2.unit);
  return r;
}

WdlNObject functor_Ck(const WdlNObject& o, std::size_t k) {
  if (k < 1 || k >= o.size()) {
    throw IndexOutOfRange("C_" + std::to_string(k) + " needs 1 <= k <= " +
                          std::to_string(o.size() == 0 ? 0 : o.size() - 1));
  }
  const WeakDistributiveLaw w = o.pair(k - 1, k);
  const Demimonad fused = weak_wreath(w).d;
  const LinMap bar = lambda_bar(w);
  const Space& a = o.monads[k - 1].space;
  const Space& b = o.monads[k].space;
  const std::size_t m = o.size() - 1;
  auto old = [&](std::size_t x) { return x < k - 1 ? x : x + 1; };

  WdlNObject r;
  for (std::size_t x = 0; x < m; ++x) {
    r.monads.push_back(x == k - 1 ? fused : o.monads[old(x)]);
  }
  r.laws.assign(m, std::vector<LinMap>(m));
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = x + 1; y < m; ++y) {
      if (x == k - 1) {
        const std::size_t j = old(y);
        const Space& sj = o.monads[j].space;
        r.laws[x][y] = chain({whisker(a, o.law(k, j), kF), whisker(kF, o.law(k - 1, j), b),
                              whisker(sj, bar, kF)})
                           .reshape(sj * fused.space, fused.space * sj);
      } else if (y == k - 1) {
        const Space& si = o.monads[x].space;
        r.laws[x][y] = chain({whisker(kF, o.law(x, k - 1), b), whisker(a, o.law(x, k), kF),
                              whisker(kF, bar, si)})
                           .reshape(fused.space * si, si * fused.space);
      } else {
        r.laws[x][y] = o.law(old(x), old(y));
      }
    }
  }
  return r;
}

LinMap left_arrow_chain(const WdlNObject& o, std::size_t m) {
  if (m < 1 || m >= o.size()) throw IndexOutOfRange("left arrow chain " + std::to_string(m));
  std::vector<std::size_t> word = {m};
  for (std::size_t i = 0; i <= m; ++i) word.push_back(i);
  const Space B = span(o, 0, m + 1);
  const Demimonad& h = o.monads[m];
  return chain({whisker(span(o, 0, m), h.mul, kF), shuffle(o, word), whisker(kF, h.unit, B)})
      .reshape(B, B);
}

LinMap iterated_idempotent(const WdlNObject& o) {
  if (o.size() == 0) throw PreconditionFailure("no monads");
  if (o.size() == 1) return o.monads[0].idem;
  const std::size_t n = o.size() - 1;
  LinMap acc = whisker(kF, lbar(o, 0, 1), span(o, 2, n + 1));
  for (std::size_t m = 2; m <= n; ++m) {
    acc = compose(whisker(kF, left_arrow_chain(o, m), span(o, m + 1, n + 1)), acc);
  }
  const Space c = o.carrier();
  return acc.reshape(c, c);
}

Report check_iterated_idempotent(const WdlNObject& o) {
  Report r("iterated idempotent");
  const LinMap e = iterated_idempotent(o);
  r.add_equal("idempotent", compose(e, e), e);
  for (std::size_t k = 1; k < o.size(); ++k) {
    r.add_equal("invariant under C_" + std::to_string(k), iterated_idempotent(functor_Ck(o, k)),
                e);
  }
  r.set("rank", rank(e));
  return r;
}

WeakDistributiveLaw composite_law(const WdlNObject& o) {
  if (o.size() < 2) throw PreconditionFailure("composite law needs at least two monads");
  const std::size_t n = o.size() - 1;
  const WdlNObject sub = o.restrict(range(0, n));
  const Demimonad s = iterated_wreath(sub);
  const Demimonad& t = o.monads[n];
  std::vector<std::size_t> word = {n};
  for (std::size_t i = 0; i < n; ++i) word.push_back(i);
  LinMap l = compose(shuffle(o, word), whisker(t.space, iterated_idempotent(sub), kF));
  return {t, s, l.reshape(t.space * s.space, s.space * t.space)};
}

Report check_composite_law(const WdlNObject& o) {
  Report r("composite law");
  const WeakDistributiveLaw w = composite_law(o);
  r.merge("law", check_wdl(w));
  const std::size_t n = o.size() - 1;
  std::vector<std::size_t> word = {n};
  for (std::size_t i = 0; i < n; ++i) word.push_back(i);
  const LinMap e = iterated_idempotent(o);
  r.add_equal("alternate form", compose(e, shuffle(o, word)), w.lambda);
  if (r.ok()) r.add_equal("lambda_bar is the iterated idempotent", lambda_bar(w), e);
  return r;
}

Demimonad iterated_wreath(const WdlNObject& o) {
  if (o.size() == 0) throw PreconditionFailure("no monads");
  if (o.size() == 1) return o.monads[0];
  const std::size_t n = o.size() - 1;
  const LinMap e = iterated_idempotent(o);
  const Space c = o.carrier();

  std::vector<std::size_t> twice = range(0, n + 1);
  twice.insert(twice.end(), twice.begin(), twice.end());
  LinMap muls = o.monads[0].mul;
  for (std::size_t i = 1; i <= n; ++i) muls = tensor(muls, o.monads[i].mul);
  LinMap mul = chain({e, muls, shuffle(o, twice)}).reshape(c * c, c);

  std::vector<std::size_t> reversed = range(0, n + 1);
  std::reverse(reversed.begin(), reversed.end());
  LinMap units = o.monads[n].unit;
  for (std::size_t i = n; i-- > 0;) units = tensor(units, o.monads[i].unit);
  LinMap unit = chain({e, shuffle(o, reversed), units}).reshape(kF, c);
  return Demimonad::make(c, std::move(mul), std::move(unit));
}

SplitDemimonad split_iterated_wreath(const WdlNObject& o) {
  if (o.size() == 0) throw PreconditionFailure("no monads");
  const std::size_t n = o.size() - 1;
  const LinMap e = n == 0 ? o.monads[0].idem : iterated_idempotent(o);
  auto [iota, pi] = split_idempotent(e);
  const Space img = iota.domain();
  const Space c = o.carrier();
  iota = iota.reshape(img, c);
  pi = pi.reshape(c, img);

  std::vector<std::size_t> twice = range(0, n + 1);
  twice.insert(twice.end(), twice.begin(), twice.end());
  LinMap muls = o.monads[0].mul;
  for (std::size_t i = 1; i <= n; ++i) muls = tensor(muls, o.monads[i].mul);
  const LinMap moved = shuffle_after(o, twice, tensor(iota, iota).reshape(img * img, c * c));
  LinMap mul = chain({pi, muls, moved}).reshape(img * img, img);

  std::vector<std::size_t> reversed = range(0, n + 1);
  std::reverse(reversed.begin(), reversed.end());
  LinMap units = o.monads[n].unit;
  for (std::size_t i = n; i-- > 0;) units = tensor(units, o.monads[i].unit);
  LinMap unit = chain({pi, shuffle(o, reversed), units}).reshape(kF, img);

  Algebra alg{img, std::move(mul), std::move(unit)};
  const Report r = check_algebra(alg);
  if (!r.ok()) {
    throw DemimonadAxiomFailure("split iterated wreath fails '" + r.failures().front().name + "'");
  }
  return {std::move(alg), std::move(iota), std::move(pi)};
}

Demimonad composite_wreath(const WdlNObject& o, const std::vector<std::size_t>& ks) {
  if (ks.size() + 1 != o.size()) {
    throw PreconditionFailure("a composite needs " + std::to_string(o.size() - 1) + " steps");
  }
  WdlNObject cur = o;
  for (std::size_t k : ks) cur = functor_Ck(cur, k);
  return cur.monads[0];
}

std::vector<std::vector<std::size_t>> composite_sequences(std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t m) -> void {
    if (m == 0) {
      out.push_back(cur);
      return;
    }
    for (std::size_t k = 1; k <= m; ++k) {
      cur.push_back(k);
      self(self, m - 1);
      cur.pop_back();
    }
  };
  rec(rec, n);
  return out;
}

Report check_associativity(const WdlNObject& o) {
  Report r("associativity of iterated wreaths");
  if (o.size() == 0) throw PreconditionFailure("no monads");
  const std::size_t n = o.size() - 1;
  std::vector<std::vector<std::size_t>> seqs;
  if (n <= 4) {
    seqs = composite_sequences(n);
  } else {
    std::mt19937_64 rng(0x5eed);
    std::set<std::vector<std::size_t>> seen;
    while (seen.size() < 24) {
      std::vector<std::size_t> ks;
      for (std::size_t m = n; m >= 1; --m) {
        ks.push_back(std::uniform_int_distribution<std::size_t>(1, m)(rng));
      }
      seen.insert(ks);
    }
    seqs.assign(seen.begin(), seen.end());
  }
  const Demimonad ref = iterated_wreath(o);
  std::vector<std::optional<Demimonad>> got(seqs.size());
  parallel_for(seqs.size(), [&](std::size_t i) { got[i] = composite_wreath(o, seqs[i]); });
  for (std::size_t i = 0; i < seqs.size(); ++i) {
    const std::string tag = "composite " + tuple_string(seqs[i]);
    r.add_equal(tag + " mul", got[i]->mul, ref.mul);
    r.add_equal(tag + " unit", got[i]->unit, ref.unit);
  }
  r.set("composites", seqs.size());
  r.set("exhaustive", n <= 4);
  return r;
}

Report check_wdln_one_cell(const WdlNOneCell& c, const WdlNObject& o, const WdlNObject& o2) {
  Report r("1-cell of weak distributive objects");
  if (c.xi.size() != o.size() || o.size() != o2.size()) {
    r.add("sizes", false,
          "1-cell has " + std::to_string(c.xi.size()) + " components for objects of size " +
              std::to_string(o.size()) + " and " + std::to_string(o2.size()));
    return r;
  }
  if (o.size() == 1) {
    r.merge("xi_0", check_monad_morphism({o.monads[0], o2.monads[0], c.carrier, c.carrier_idem,
                                          c.xi[0]}));
    return r;
  }
  for (std::size_t i = 0; i < o.size(); ++i) {
    for (std::size_t j = i + 1; j < o.size(); ++j) {
      r.merge(tuple_string({i, j}),
              check_wdl_one_cell({c.carrier, c.carrier_idem, c.xi[j], c.xi[i]}, o.pair(i, j),
                                 o2.pair(i, j)));
    }
  }
  return r;
}

WdlNOneCell identity_wdln_one_cell(const WdlNObject& o) {
  WdlNOneCell c{kF, LinMap::identity(kF, o.field()), {}};
  for (const Demimonad& m : o.monads) c.xi.push_back(m.idem);
  return c;
}

WdlNOneCell functor_Ck_one_cell(const WdlNOneCell& c, const WdlNObject& o, const WdlNObject& o2,
                                std::size_t k) {
  if (k < 1 || k >= o.size()) throw IndexOutOfRange("C_" + std::to_string(k));
  const Report rep = check_wdln_one_cell(c, o, o2);
  if (!rep.ok()) {
    throw InvalidOneCell("not a 1-cell: " + rep.failures().front().name + ": " +
                         rep.failures().front().witness);
  }
  WdlNOneCell r{c.carrier, c.carrier_idem, {}};
  for (std::size_t x = 0; x + 1 < o.size(); ++x) {
    if (x < k - 1) {
      r.xi.push_back(c.xi[x]);
    } else if (x == k - 1) {
      r.xi.push_back(wreath_one_cell({c.carrier, c.carrier_idem, c.xi[k], c.xi[k - 1]},
                                     o.pair(k - 1, k), o2.pair(k - 1, k))
                         .xi);
    } else {
      r.xi.push_back(c.xi[x + 1]);
    }
  }
  return r;
}

MonadMorphism iterated_one_cell(const WdlNOneCell& c, const WdlNObject& o, const WdlNObject& o2) {
  if (c.xi.size() != o.size() || o.size() != o2.size() || o.size() == 0) {
    throw InvalidOneCell("1-cell and objects differ in size");
  }
  const std::size_t n = o.size() - 1;
  const Space& v = c.carrier;
  LinMap acc = whisker(span(o2, 0, n), c.xi[n], kF);
  for (std::size_t i = n; i-- > 0;) {
    acc = compose(whisker(span(o2, 0, i), c.xi[i], span(o, i + 1, n + 1)), acc);
  }
  const Space src = o.carrier();
  const Space tgt = o2.carrier();
  acc = compose(whisker(v, iterated_idempotent(o), kF), acc).reshape(tgt * v, v * src);
  return {iterated_wreath(o), iterated_wreath(o2), v, c.carrier_idem, acc};
}

WdlNOneCell restrict_one_cell(const WdlNOneCell& c, const std::vector<std::size_t>& indices) {
  WdlNOneCell r{c.carrier, c.carrier_idem, {}};
  for (std::size_t i : indices) {
    if (i >= c.xi.size()) throw IndexOutOfRange("1-cell component " + std::to_string(i));
    r.xi.push_back(c.xi[i]);
  }
  return r;
}

}  // namespace wreath
