#include "transit/convexity.hpp"

#include <algorithm>
#include <string>

#include "transit/error.hpp"

namespace transit {

namespace {

void guard_enumerable(std::size_t n, std::size_t limit = kMaxEnumerableGround) {
  if (n > limit) {
    throw Error(ErrorCode::kGroundTooLarge,
                "exhaustive enumeration needs n <= " + std::to_string(limit) + ", got " +
                    std::to_string(n));
  }
}

bool less_size_bits(Subset a, Subset b) { return size_then_bits(a, b); }

}  // namespace

Subset TransitClosure::closure(Subset s) const { return hull(r_, s); }
bool TransitClosure::is_closed(Subset s) const { return is_convex(r_, s); }

ConvexFamily::ConvexFamily(std::vector<Subset> sets) : sets_(std::move(sets)) {
  std::sort(sets_.begin(), sets_.end(), less_size_bits);
  sets_.erase(std::unique(sets_.begin(), sets_.end()), sets_.end());
}

bool ConvexFamily::contains(Subset s) const {
  return std::binary_search(sets_.begin(), sets_.end(), s, less_size_bits);
}

bool is_convex(const TransitFunction& r, Subset s) {
  for (std::size_t u : s) {
    for (std::size_t v : s) {
      if (v <= u) continue;
      if (!r(u, v).is_subset_of(s)) return false;
    }
  }
  return true;
}

Subset hull(const TransitFunction& r, Subset s) {
  Subset result = s;
  Subset pending = s;
  Subset processed;
  while (!pending.empty()) {
    const std::size_t a = pending.min();
    pending.erase(a);
    processed.insert(a);
    Subset added;
    for (std::size_t b : processed) added |= r(a, b);
    added -= result;
    result |= added;
    pending |= added;
  }
  return result;
}

ConvexFamily closed_sets(const ClosureOperator& op) {
  const std::size_t n = op.ground_size();
  guard_enumerable(n);
  const Subset full = Subset::full(n);
  std::vector<Subset> out;
  Subset current = op.closure(Subset{});
  out.push_back(current);
  while (current != full) {
    bool advanced = false;
    for (std::size_t i = n; i-- > 0;) {
      if (current.contains(i)) continue;
      const Subset below = Subset::full(i);
      const Subset next = op.closure((current & below).with(i));
      if (((next - current) & below).empty()) {
        current = next;
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
    out.push_back(current);
  }
  return ConvexFamily(std::move(out));
}

ConvexFamily convex_sets(const TransitFunction& r) { return closed_sets(TransitClosure(r)); }

ConvexFamily convex_sets_bruteforce(const TransitFunction& r) {
  const std::size_t n = r.size();
  guard_enumerable(n);
  std::vector<Subset> out;
  const Subset::word_type limit = Subset::word_type{1} << n;
  for (Subset::word_type bits = 0; bits < limit; ++bits) {
    if (is_convex(r, Subset(bits))) out.push_back(Subset(bits));
  }
  return ConvexFamily(std::move(out));
}

Subset extreme_points(const ClosureOperator& op, Subset k) {
  if (!op.is_closed(k)) throw Error(ErrorCode::kNotConvex, "extreme points need a convex set");
  Subset ext;
  for (std::size_t e : k) {
    if (op.is_closed(k.without(e))) ext.insert(e);
  }
  return ext;
}

Subset extreme_points(const TransitFunction& r, Subset k) {
  return extreme_points(TransitClosure(r), k);
}

GeometryCertificate geometry_certificate(const ClosureOperator& op) {
  const std::size_t n = op.ground_size();
  guard_enumerable(n);
  const Subset full = Subset::full(n);
  const ConvexFamily family = closed_sets(op);

  GeometryCertificate cert;
  cert.mkm = cert.anti_exchange = cert.extension = true;
  std::vector<Subset> grown(n);
  for (Subset k : family) {
    if (cert.mkm && op.closure(extreme_points(op, k)) != k) {
      cert.mkm = false;
      cert.mkm_violator = k;
    }
    const Subset outside = full - k;
    bool extendable = false;
    for (std::size_t p : outside) {
      grown[p] = op.closure(k.with(p));
      if (grown[p] == k.with(p)) extendable = true;
    }
    if (cert.extension && k != full && !extendable) {
      cert.extension = false;
      cert.stuck = k;
    }
    if (cert.anti_exchange) {
      for (std::size_t p : outside) {
        for (std::size_t q : outside) {
          if (q <= p) continue;
          if (grown[p].contains(q) && grown[q].contains(p)) {
            cert.anti_exchange = false;
            cert.anti_exchange_violator = AntiExchangeViolation{k, p, q};
            break;
          }
        }
        if (!cert.anti_exchange) break;
      }
    }
  }
  if (cert.mkm != cert.anti_exchange || cert.mkm != cert.extension) {
    throw Error(ErrorCode::kInternalDisagreement,
                "convex-geometry criteria disagree (mkm=" + std::to_string(cert.mkm) +
                    ", anti-exchange=" + std::to_string(cert.anti_exchange) +
                    ", extension=" + std::to_string(cert.extension) + ")");
  }
  cert.is_geometry = cert.mkm;
  if (cert.is_geometry) {
    Subset k = op.closure(Subset{});
    for (std::size_t e : k) cert.chain.push_back(e);
    while (k != full) {
      for (std::size_t p : full - k) {
        if (op.is_closed(k.with(p))) {
          cert.chain.push_back(p);
          k.insert(p);
          break;
        }
      }
    }
  }
  return cert;
}

GeometryCertificate is_convex_geometry(const TransitFunction& r) {
  return geometry_certificate(TransitClosure(r));
}

bool verify_chain(const ClosureOperator& op, const std::vector<std::size_t>& chain) {
  const std::size_t n = op.ground_size();
  if (chain.size() != n) return false;
  Subset prefix;
  for (std::size_t e : chain) {
    if (e >= n || prefix.contains(e)) return false;
    prefix.insert(e);
    if (!op.is_closed(prefix)) return false;
  }
  return true;
}

Subset ex_b(const Betweenness& b, Subset x) {
  Subset between;
  for (std::size_t u : x) {
    for (std::size_t v : x) {
      if (v > u) between |= b(u, v);
    }
  }
  return x - between;
}

AxiomVerdict check_eb1(const Betweenness& b) {
  const std::size_t n = b.size();
  guard_enumerable(n, 16);
  const Subset::word_type limit = Subset::word_type{1} << n;
  for (Subset::word_type bits = 1; bits < limit; ++bits) {
    const Subset x(bits);
    Subset between;
    for (std::size_t u : x) {
      for (std::size_t v : x) {
        if (v > u) between |= b(u, v);
      }
    }
    between &= x;
    const Subset ext = x - between;
    Subset covered;
    for (std::size_t u : ext) {
      for (std::size_t v : ext) {
        if (v > u) covered |= b(u, v);
      }
    }
    const Subset uncovered = between - covered;
    if (uncovered.empty()) continue;
    const std::size_t x2 = uncovered.min();
    for (std::size_t x1 : x) {
      for (std::size_t x3 : x) {
        if (b(x1, x3).contains(x2)) {
          return AxiomVerdict::fail("eB1", {{"x1", x1}, {"x2", x2}, {"x3", x3}}, x);
        }
      }
    }
  }
  return AxiomVerdict::pass("eB1");
}

AxiomVerdict check_eb2(const Betweenness& b) {
  const std::size_t n = b.size();
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      for (std::size_t w = 0; w < n; ++w) {
        const Subset allowed = b(u, v) | b(u, w) | b(v, w);
        for (std::size_t x : b(u, v)) {
          const Subset bad = b(x, w) - allowed;
          if (!bad.empty()) {
            return AxiomVerdict::fail(
                "eB2", {{"u", u}, {"v", v}, {"w", w}, {"x", x}, {"y", bad.min()}});
          }
        }
      }
    }
  }
  return AxiomVerdict::pass("eB2");
}

TransitFunction segment_transit(const TransitFunction& r) {
  return TransitFunction::from_function(
      r.ground(), [&](std::size_t u, std::size_t v) { return hull(r, r(u, v)); });
}

AxiomVerdict is_jhc(const TransitFunction& r) {
  const std::size_t n = r.size();
  guard_enumerable(n);
  std::vector<Subset> pair_hull(n * n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) pair_hull[u * n + v] = hull(r, Subset::pair(u, v));
  }
  for (Subset k : convex_sets(r)) {
    if (k.empty()) continue;
    for (std::size_t p = 0; p < n; ++p) {
      Subset joined;
      for (std::size_t e : k) joined |= pair_hull[e * n + p];
      if (hull(r, k.with(p)) != joined) return AxiomVerdict::fail("JHC", {{"p", p}}, k);
    }
  }
  return AxiomVerdict::pass("JHC");
}

}  // namespace transit
