#include "hpdt/search.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <mutex>
#include <set>
#include <thread>

#include <json.hpp>

#include "hpdt/kernels.hpp"

namespace hpdt {

namespace {

using nlohmann::json;

template <class Fn>
void parallel_for(unsigned threads, std::size_t count, Fn&& fn) {
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(count)));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      for (std::size_t i = t; i < count; i += threads) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

std::optional<json> read_checkpoint(const SearchOptions& opts, std::string_view kind) {
  if (!opts.checkpoint || !std::filesystem::exists(*opts.checkpoint)) return std::nullopt;
  std::ifstream in(*opts.checkpoint);
  json j = json::parse(in);
  if (j.value("kind", "") != kind) {
    throw InvalidInput("checkpoint " + opts.checkpoint->string() + " belongs to another search");
  }
  return j;
}

void write_checkpoint(const SearchOptions& opts, const json& j) {
  if (!opts.checkpoint) return;
  const auto tmp = std::filesystem::path(opts.checkpoint->string() + ".tmp");
  {
    std::ofstream out(tmp);
    out << j.dump() << '\n';
  }
  std::filesystem::rename(tmp, *opts.checkpoint);
}

json pair_hit_json(const PairHit& h) {
  return {{"r", h.r}, {"s", h.s}, {"t", h.t.str()}, {"integral", h.integral}};
}

PairHit pair_hit_from_json(const json& j) {
  return {j.at("r").get<std::uint64_t>(), j.at("s").get<std::uint64_t>(),
          Rational::parse(j.at("t").get<std::string>()), j.at("integral").get<bool>()};
}

std::optional<PairHit> exact_pair_check(std::uint64_t r, std::uint64_t s) {
  const Integer R(static_cast<unsigned long>(r)), S(static_cast<unsigned long>(s));
  const Rational q(S * S * R * R - 1, S * S - R * R);
  auto t = rational_kth_root(q, 2);
  if (!t) return std::nullopt;
  return PairHit{r, s, *t, t->is_integer()};
}

void scan_r(std::uint64_t r, std::uint64_t bound, std::vector<PairHit>& out) {
  const auto tables = kernels::make_pair_filter_tables(static_cast<std::uint32_t>(r));
  constexpr std::size_t kBlock = 4096;
  std::vector<std::uint8_t> mask(kBlock);
  for (std::uint64_t s0 = r + 1; s0 < bound; s0 += kBlock) {
    const std::size_t n = static_cast<std::size_t>(std::min<std::uint64_t>(kBlock, bound - s0));
    std::span<std::uint8_t> m(mask.data(), n);
    kernels::pair_square_filter(tables, static_cast<std::uint32_t>(s0), m);
    for (std::size_t i = 0; i < n; ++i) {
      if (!m[i]) continue;
      if (auto hit = exact_pair_check(r, s0 + i)) out.push_back(*hit);
    }
  }
}

}  // namespace

std::vector<PairHit> search_integer_pairs(std::uint64_t bound, const SearchOptions& opts) {
  if (bound < 2) throw InvalidInput("search_integer_pairs: bound must be >= 2");
  if (bound > (1ull << 31)) throw InvalidInput("search_integer_pairs: bound above 2^31");

  std::uint64_t next_r = 2;
  std::vector<PairHit> hits;
  if (auto cp = read_checkpoint(opts, "search-rs")) {
    if (cp->at("bound").get<std::uint64_t>() != bound) {
      throw InvalidInput("checkpoint was written for a different bound");
    }
    next_r = cp->at("next").get<std::uint64_t>();
    for (const auto& h : cp->at("hits")) hits.push_back(pair_hit_from_json(h));
  }

  const std::uint64_t chunk = std::max(1u, opts.checkpoint_every);
  std::mutex mu;
  for (std::uint64_t r0 = next_r; r0 < bound; r0 += chunk) {
    const std::uint64_t r1 = std::min(bound, r0 + chunk);
    parallel_for(opts.threads, static_cast<std::size_t>(r1 - r0), [&](std::size_t i) {
      std::vector<PairHit> local;
      scan_r(r0 + i, bound, local);
      if (local.empty()) return;
      std::lock_guard lock(mu);
      hits.insert(hits.end(), local.begin(), local.end());
    });
    std::sort(hits.begin(), hits.end(),
              [](const PairHit& a, const PairHit& b) { return std::tie(a.r, a.s) < std::tie(b.r, b.s); });
    if (opts.checkpoint) {
      json j{{"schema", "hpdt.checkpoint/1"}, {"kind", "search-rs"}, {"bound", bound}, {"next", r1}};
      j["hits"] = json::array();
      for (const auto& h : hits) j["hits"].push_back(pair_hit_json(h));
      write_checkpoint(opts, j);
    }
  }
  return hits;
}

std::vector<PellSolution> pell_sequence(int count) {
  if (count < 1) throw InvalidInput("pell_sequence: count must be >= 1");
  std::vector<PellSolution> out;
  Integer p = 2, r = 1;
  for (int i = 1; i <= count; ++i) {
    out.push_back({p, r, i});
    Integer np = 2 * p + 3 * r;
    Integer nr = p + 2 * r;
    p = std::move(np);
    r = std::move(nr);
  }
  return out;
}

// ---------------------------------------------------------------------------
// taxicab

namespace {

using u128 = unsigned __int128;

u128 upow(std::uint64_t v, int k) {
  u128 acc = 1;
  for (int i = 0; i < k; ++i) acc *= v;
  return acc;
}

/// Largest y with y^k <= v.
std::uint64_t floor_root(std::uint64_t v, int k) {
  auto y = static_cast<std::uint64_t>(std::pow(static_cast<long double>(v), 1.0L / k));
  while (y > 0 && upow(y, k) > v) --y;
  while (upow(y + 1, k) <= v) ++y;
  return y;
}

/// Smallest y with y^k >= v.
std::uint64_t ceil_root(std::uint64_t v, int k) {
  const std::uint64_t y = floor_root(v, k);
  return upow(y, k) == v ? y : y + 1;
}

struct SumEntry {
  std::uint64_t sum;
  std::uint32_t x, y;
};

TaxicabHit make_hit(std::uint64_t X, std::uint64_t Y, std::uint64_t Z, std::uint64_t W, int k) {
  TaxicabHit h{X, Y, Z, W, k, false, std::nullopt};
  const Integer prod = Integer(static_cast<unsigned long>(X)) * static_cast<unsigned long>(Y) *
                       static_cast<unsigned long>(Z) * static_cast<unsigned long>(W);
  const KthRoot root = int_kth_root(prod, 2);
  if (root.exact) {
    h.square_product = true;
    h.sqrt_witness = root.root;
  }
  return h;
}

std::vector<TaxicabHit> scan_segment(std::uint64_t bound, int k, std::uint64_t lo, std::uint64_t hi) {
  std::vector<SumEntry> entries;
  std::vector<std::uint64_t> row;
  for (std::uint64_t x = 1; x <= bound; ++x) {
    const std::uint64_t xk = static_cast<std::uint64_t>(upow(x, k));
    if (2 * static_cast<u128>(xk) >= hi) break;
    std::uint64_t y_lo = x;
    if (lo > xk) y_lo = std::max(y_lo, ceil_root(lo - xk, k));
    const std::uint64_t y_hi = std::min(bound, floor_root(hi - 1 - xk, k));
    if (y_lo > y_hi) continue;
    row.resize(static_cast<std::size_t>(y_hi - y_lo + 1));
    kernels::power_sum_row(static_cast<unsigned>(k), static_cast<std::uint32_t>(x),
                           static_cast<std::uint32_t>(y_lo), row);
    for (std::size_t i = 0; i < row.size(); ++i) {
      entries.push_back({row[i], static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(y_lo + i)});
    }
  }
  std::sort(entries.begin(), entries.end(), [](const SumEntry& a, const SumEntry& b) {
    return std::tie(a.sum, a.x) < std::tie(b.sum, b.x);
  });
  std::vector<TaxicabHit> hits;
  for (std::size_t i = 0; i < entries.size();) {
    std::size_t j = i + 1;
    while (j < entries.size() && entries[j].sum == entries[i].sum) ++j;
    for (std::size_t a = i; a < j; ++a) {
      for (std::size_t b = a + 1; b < j; ++b) {
        hits.push_back(make_hit(entries[a].x, entries[a].y, entries[b].x, entries[b].y, k));
      }
    }
    i = j;
  }
  return hits;
}

json taxicab_hit_json(const TaxicabHit& h) {
  return {{"X", h.X}, {"Y", h.Y}, {"Z", h.Z}, {"W", h.W}, {"k", h.k}};
}

bool hit_less(const TaxicabHit& a, const TaxicabHit& b) {
  return std::tie(a.X, a.Y, a.Z, a.W) < std::tie(b.X, b.Y, b.Z, b.W);
}

}  // namespace

std::vector<TaxicabHit> taxicab_search(std::uint64_t bound, int k, const SearchOptions& opts) {
  if (bound < 2) throw InvalidInput("taxicab_search: bound must be >= 2");
  if (k != 3 && k != 4) throw InvalidInput("taxicab_search: k must be 3 or 4");
  const u128 max_sum = 2 * upow(bound, k);
  if (bound > (1ull << 31) || max_sum >= (static_cast<u128>(1) << 63)) {
    throw InvalidInput("taxicab_search: bound too large for 64-bit sums");
  }

  constexpr long double kPairsPerSegment = 2.0e6L;
  const long double pairs = static_cast<long double>(bound) * (bound + 1) / 2;
  const std::size_t segments = static_cast<std::size_t>(std::max(1.0L, std::ceil(pairs / kPairsPerSegment)));
  std::vector<std::uint64_t> edges(segments + 1);
  edges[0] = 0;
  edges[segments] = static_cast<std::uint64_t>(max_sum) + 1;
  for (std::size_t j = 1; j < segments; ++j) {
    // pair count below T grows like T^(2/k)
    const long double frac = std::pow(static_cast<long double>(j) / segments, k / 2.0L);
    edges[j] = std::max(edges[j - 1], static_cast<std::uint64_t>(frac * static_cast<long double>(max_sum)));
  }

  std::size_t next = 0;
  std::vector<TaxicabHit> hits;
  if (auto cp = read_checkpoint(opts, "taxicab")) {
    if (cp->at("bound").get<std::uint64_t>() != bound || cp->at("k").get<int>() != k ||
        cp->at("segments").get<std::size_t>() != segments) {
      throw InvalidInput("checkpoint was written for a different taxicab search");
    }
    next = cp->at("next").get<std::size_t>();
    for (const auto& j : cp->at("hits")) {
      hits.push_back(make_hit(j.at("X"), j.at("Y"), j.at("Z"), j.at("W"), k));
    }
  }

  const std::size_t batch = std::max(1u, opts.threads);
  std::mutex mu;
  while (next < segments) {
    const std::size_t end = std::min(segments, next + batch);
    parallel_for(opts.threads, end - next, [&](std::size_t i) {
      auto local = scan_segment(bound, k, edges[next + i], edges[next + i + 1]);
      std::lock_guard lock(mu);
      hits.insert(hits.end(), local.begin(), local.end());
    });
    next = end;
    std::sort(hits.begin(), hits.end(), hit_less);
    if (opts.checkpoint) {
      json j{{"schema", "hpdt.checkpoint/1"}, {"kind", "taxicab"}, {"bound", bound},
             {"k", k},  {"segments", segments},         {"next", next}};
      j["hits"] = json::array();
      for (const auto& h : hits) j["hits"].push_back(taxicab_hit_json(h));
      write_checkpoint(opts, j);
    }
  }
  return hits;
}

std::optional<SexticForm> sextic_form_check(const TaxicabHit& hit) {
  if (hit.k != 3) throw InvalidInput("sextic_form_check needs a cubic identity");
  auto big = [](std::uint64_t v) { return Integer(static_cast<unsigned long>(v)); };
  const std::array<Integer, 2> left{big(hit.X), big(hit.Y)};
  const std::array<Integer, 2> right{big(hit.Z), big(hit.W)};
  for (int i = 0; i < 2; ++i) {
    const KthRoot sl = int_kth_root(left[i], 2);
    if (!sl.exact) continue;
    for (int j = 0; j < 2; ++j) {
      const KthRoot sr = int_kth_root(right[j], 2);
      if (!sr.exact) continue;
      const Integer& ol = left[1 - i];
      const Integer& orr = right[1 - j];
      const Integer h = squarefree_part(ol);
      if (squarefree_part(orr) != h) continue;
      const KthRoot yl = int_kth_root(ol / h, 2);
      const KthRoot yr = int_kth_root(orr / h, 2);
      if (!yl.exact || !yr.exact) continue;
      return SexticForm{sl.root, yl.root, sr.root, yr.root, h};
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Euler's quartic parametrization

namespace {

Poly from_ascending(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return Poly(std::move(v));
}

}  // namespace

std::array<Poly, 4> euler_octic_forms() {
  return {from_ascending({0, 1, 3, -2, 0, 1, 0, 1}),   // a^7 + a^5 - 2a^3 + 3a^2 + a
          from_ascending({1, 0, 1, 0, -2, -3, 1}),     // a^6 - 3a^5 - 2a^4 + a^2 + 1
          from_ascending({0, 1, -3, -2, 0, 1, 0, 1}),  // a^7 + a^5 - 2a^3 - 3a^2 + a
          from_ascending({1, 0, 1, 0, -2, 3, 1})};     // a^6 + 3a^5 - 2a^4 + a^2 + 1
}

EulerValues euler_quartic_parametrization(const Rational& a) {
  const auto forms = euler_octic_forms();
  EulerValues out;
  for (std::size_t i = 0; i < 4; ++i) out.xyzw[i] = forms[i](a);
  const auto& v = out.xyzw;
  out.degenerate = v[0] == v[2] || v[1] == v[3] || (v[0] == v[3] && v[1] == v[2]) ||
                   (abs(v[0]) == abs(v[2]) && abs(v[1]) == abs(v[3])) ||
                   (abs(v[0]) == abs(v[3]) && abs(v[1]) == abs(v[2]));
  return out;
}

Poly euler_u_polynomial() {
  return from_ascending({324, 0, 351, 0, -80, 0, -266, 0, 141, 0, -23, 0, 1});
}

Poly euler_genus2_sextic() { return from_ascending({324, 351, -80, -266, 141, -23, 1}); }

ProofReport euler_reduction_check() {
  ProofReport rep;
  rep.subject = "euler-octic";
  auto add = [&](std::string name, bool ok) { rep.checks.push_back({std::move(name), ok}); };
  const auto [X, Y, Z, W] = euler_octic_forms();
  bool homogeneous = true;
  for (const Poly* p : {&X, &Y, &Z, &W}) homogeneous = homogeneous && p->degree() <= 7;
  add("X, Y, Z, W are b = 1 restrictions of degree-7 forms", homogeneous);
  add("X^4 + Y^4 = Z^4 + W^4", pow(X, 4) + pow(Y, 4) == pow(Z, 4) + pow(W, 4));
  const Poly xz_over_a2 = from_ascending({1, 0, -13, 0, 6, 0, -2, 0, -3, 0, 2, 0, 1});
  const Poly yw = from_ascending({1, 0, 2, 0, -3, 0, -2, 0, 6, 0, -13, 0, 1});
  add("XZ = a^2 (a^12 + 2a^10 - 3a^8 - 2a^6 + 6a^4 - 13a^2 + 1)",
      X * Z == Poly::monomial(Rational(1), 2) * xz_over_a2);
  add("YW = a^12 - 13a^10 + 6a^8 - 2a^6 - 3a^4 + 2a^2 + 1", Y * W == yw);
  add("XZ / a^2 = a^12 YW(1/a)", reversal(yw, 12) == xz_over_a2);
  const auto h = symmetric_in_u(X * Y * Z * W, 14);
  add("XYZW = a^14 h(a + 1/a) with h = u^12 - 23u^10 + ... + 324",
      h.has_value() && *h == euler_u_polynomial());
  add("h(u) = g(u^2) with g = t^6 - 23t^5 + 141t^4 - 266t^3 - 80t^2 + 351t + 324",
      compose(euler_genus2_sextic(), Poly::monomial(Rational(1), 2)) == euler_u_polynomial());
  add("a = 1 gives the trivial identity X = Z", euler_quartic_parametrization(Rational(1)).degenerate);
  return rep;
}

// ---------------------------------------------------------------------------
// Gaussian triples

std::array<std::array<GaussianRational, 3>, 2> known_gaussian_triples() {
  auto g = [](long re, long im) { return GaussianRational(Rational(re), Rational(im)); };
  return {{{g(28, 4), g(42, 24), g(140, 52)}, {g(15, -10), g(-15, -10), g(0, 16)}}};
}

namespace {

std::optional<GaussianTripleRecord> verified_record(const std::array<GaussianRational, 3>& e,
                                                    std::string origin) {
  std::vector<GaussianRational> v(e.begin(), e.end());
  TupleVerdict<GaussianRational> verdict;
  try {
    verdict = verify_tuple(v, 4);
  } catch (const InvalidInput&) {
    return std::nullopt;
  }
  if (!verdict.ok()) return std::nullopt;
  const auto& w = verdict.tuple->witnesses;
  return GaussianTripleRecord{e, {w.at({0, 1}), w.at({0, 2}), w.at({1, 2})}, std::nullopt,
                              std::move(origin)};
}

std::string class_key(const std::array<GaussianRational, 3>& e) {
  std::string best;
  for (int sym = 0; sym < 4; ++sym) {
    std::vector<std::string> parts;
    for (const auto& z : e) {
      GaussianRational w = (sym & 1) ? z.conj() : z;
      if (sym & 2) w = -w;
      parts.push_back(w.re().str() + "," + w.im().str());
    }
    std::sort(parts.begin(), parts.end());
    std::string key = parts[0] + ";" + parts[1] + ";" + parts[2];
    if (best.empty() || key < best) best = key;
  }
  return best;
}

}  // namespace

GaussianScan gaussian_verify_and_scan(int box) {
  if (box < 0) throw InvalidInput("gaussian scan box must be >= 0");
  GaussianScan out;
  for (const auto& tri : known_gaussian_triples()) {
    const std::array<std::pair<const char*, int>, 4> variants{
        {{"reference", 0}, {"conjugate", 1}, {"negation", 2}, {"negated conjugate", 3}}};
    for (const auto& [name, sym] : variants) {
      std::array<GaussianRational, 3> e = tri;
      for (auto& z : e) {
        if (sym & 1) z = z.conj();
        if (sym & 2) z = -z;
      }
      auto rec = verified_record(e, name);
      if (!rec) throw std::logic_error("reference Gaussian triple failed verification");
      out.known.push_back(std::move(*rec));
    }
  }
  if (box == 0) return out;

  std::set<std::string> seen;
  for (long re = -box; re <= box; ++re) {
    for (long im = -box; im <= box; ++im) {
      const GaussianRational r{Rational(re), Rational(im)};
      const GaussianRational s = r + GaussianRational(2);
      std::optional<RegularTriple<GaussianRational>> tri;
      try {
        tri = construct_regular(r, s, 2);
      } catch (const std::exception&) {
        continue;  // excluded seed or degenerate triple
      }
      if (!tri) continue;
      const std::array<GaussianRational, 3> e{tri->a, tri->b, tri->c};
      auto rec = verified_record(e, "scan");
      if (!rec) continue;
      if (!seen.insert(class_key(e)).second) continue;
      rec->seed_r = r;
      out.found.push_back(std::move(*rec));
    }
  }
  return out;
}

}  // namespace hpdt
