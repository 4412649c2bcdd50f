#include "transit/axioms.hpp"

#include <algorithm>
#include <cctype>
#include <string>
#include <unordered_set>

namespace transit {

namespace {

using W = std::vector<WitnessEntry>;

AxiomVerdict check_b1(const TransitFunction& r) {
  const std::size_t n = r.size();
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      for (std::size_t x : r(u, v)) {
        if (x != v && r(u, x).contains(v)) {
          return AxiomVerdict::fail("b1", W{{"u", u}, {"v", v}, {"x", x}});
        }
      }
    }
  }
  return AxiomVerdict::pass("b1");
}

AxiomVerdict check_b3(const TransitFunction& r) {
  const std::size_t n = r.size();
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      for (std::size_t x : r(u, v)) {
        for (std::size_t y : r(u, x)) {
          if (!r(y, v).contains(x)) {
            return AxiomVerdict::fail("b3", W{{"u", u}, {"v", v}, {"x", x}, {"y", y}});
          }
        }
      }
    }
  }
  return AxiomVerdict::pass("b3");
}

AxiomVerdict check_m(const TransitFunction& r) {
  const std::size_t n = r.size();
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      const Subset s = r(u, v);
      for (std::size_t x : s) {
        for (std::size_t y : s) {
          const Subset extra = r(x, y) - s;
          if (!extra.empty()) {
            return AxiomVerdict::fail(
                "m", W{{"u", u}, {"v", v}, {"x", x}, {"y", y}, {"z", extra.min()}});
          }
        }
      }
    }
  }
  return AxiomVerdict::pass("m");
}

AxiomVerdict check_j0(const TransitFunction& r) {
  const std::size_t n = r.size();
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (v == u) continue;
      for (std::size_t x = 0; x < n; ++x) {
        if (x == u || x == v || r(u, v).contains(x)) continue;
        for (std::size_t y = 0; y < n; ++y) {
          if (y == u || y == v || y == x) continue;
          if (r(u, y).contains(x) && r(x, v).contains(y)) {
            return AxiomVerdict::fail("J0", W{{"u", u}, {"v", v}, {"x", x}, {"y", y}});
          }
        }
      }
    }
  }
  return AxiomVerdict::pass("J0");
}

AxiomVerdict check_ch(const TransitFunction& r) {
  const std::size_t n = r.size();
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      const Subset uv = r(u, v);
      for (std::size_t w = 0; w < n; ++w) {
        const Subset allowed = uv | r(u, w) | r(v, w);
        for (std::size_t x : uv) {
          const Subset bad = r(x, w) - allowed;
          if (!bad.empty()) {
            return AxiomVerdict::fail(
                "Ch", W{{"u", u}, {"v", v}, {"w", w}, {"x", x}, {"y", bad.min()}});
          }
        }
      }
    }
  }
  return AxiomVerdict::pass("Ch");
}

AxiomVerdict check_p(const TransitFunction& r) {
  const std::size_t n = r.size();
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      for (std::size_t w = 0; w < n; ++w) {
        Subset reach;
        for (std::size_t z : r(u, w)) reach |= r(z, v);
        for (std::size_t x : r(u, v)) {
          const Subset bad = r(x, w) - reach;
          if (!bad.empty()) {
            return AxiomVerdict::fail(
                "P", W{{"u", u}, {"v", v}, {"w", w}, {"x", x}, {"y", bad.min()}});
          }
        }
      }
    }
  }
  return AxiomVerdict::pass("P");
}

AxiomVerdict check_a_prime(const TransitFunction& r) {
  const std::size_t n = r.size();
  const Subset full = r.full();
  std::size_t best_u = 0, best_v = 0, best = 0;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u; v < n; ++v) {
      if (r(u, v) == full) return AxiomVerdict::pass("a'");
      if (r(u, v).size() > best) {
        best = r(u, v).size();
        best_u = u;
        best_v = v;
      }
    }
  }
  // Witness: a largest transit set and an element it misses.
  return AxiomVerdict::fail(
      "a'", W{{"u", best_u}, {"v", best_v}, {"missing", (full - r(best_u, best_v)).min()}});
}

std::unordered_set<Subset::word_type> transit_set_words(const TransitFunction& r) {
  std::unordered_set<Subset::word_type> sets;
  for (std::size_t u = 0; u < r.size(); ++u) {
    for (std::size_t v = u; v < r.size(); ++v) sets.insert(r(u, v).bits());
  }
  return sets;
}

AxiomVerdict check_k(const TransitFunction& r) {
  const std::size_t n = r.size();
  const auto sets = transit_set_words(r);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u; v < n; ++v) {
      for (std::size_t x = u; x < n; ++x) {
        for (std::size_t y = (x == u ? v : x); y < n; ++y) {
          const Subset meet = r(u, v) & r(x, y);
          if (!meet.empty() && !sets.contains(meet.bits())) {
            return AxiomVerdict::fail("k", W{{"u", u}, {"v", v}, {"x", x}, {"y", y}});
          }
        }
      }
    }
  }
  return AxiomVerdict::pass("k");
}

bool cg_extends(const TransitFunction& r, Subset s) {
  for (std::size_t z : s) {
    for (std::size_t w : r.full() - s) {
      if (r(w, z) == s.with(w)) return true;
    }
  }
  return false;
}

AxiomVerdict check_cg(const TransitFunction& r) {
  const std::size_t n = r.size();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x; y < n; ++y) {
      const Subset s = r(x, y);
      if (s == r.full()) continue;
      if (!cg_extends(r, s)) return AxiomVerdict::fail("cg", W{{"x", x}, {"y", y}});
    }
  }
  return AxiomVerdict::pass("cg");
}

}  // namespace

std::string_view label(AxiomId a) {
  switch (a) {
    case AxiomId::b1: return "b1";
    case AxiomId::b3: return "b3";
    case AxiomId::m: return "m";
    case AxiomId::j0: return "J0";
    case AxiomId::ch: return "Ch";
    case AxiomId::p: return "P";
    case AxiomId::a_prime: return "a'";
    case AxiomId::k: return "k";
    case AxiomId::cg: return "cg";
  }
  return "?";
}

std::string_view identifier(AxiomId a) {
  switch (a) {
    case AxiomId::b1: return "b1";
    case AxiomId::b3: return "b3";
    case AxiomId::m: return "m";
    case AxiomId::j0: return "j0";
    case AxiomId::ch: return "ch";
    case AxiomId::p: return "p";
    case AxiomId::a_prime: return "a_prime";
    case AxiomId::k: return "k";
    case AxiomId::cg: return "cg";
  }
  return "?";
}

std::optional<AxiomId> parse_axiom(std::string_view text) {
  std::string lowered(text);
  std::transform(lowered.begin(), lowered.end(), lowered.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  for (AxiomId a : kAllAxioms) {
    std::string lab(label(a));
    std::transform(lab.begin(), lab.end(), lab.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (lowered == identifier(a) || lowered == lab) return a;
  }
  return std::nullopt;
}

AxiomVerdict check_axiom(const TransitFunction& r, AxiomId a) {
  switch (a) {
    case AxiomId::b1: return check_b1(r);
    case AxiomId::b3: return check_b3(r);
    case AxiomId::m: return check_m(r);
    case AxiomId::j0: return check_j0(r);
    case AxiomId::ch: return check_ch(r);
    case AxiomId::p: return check_p(r);
    case AxiomId::a_prime: return check_a_prime(r);
    case AxiomId::k: return check_k(r);
    case AxiomId::cg: return check_cg(r);
  }
  return AxiomVerdict::pass(std::string(label(a)));
}

bool witness_confirms(const TransitFunction& r, AxiomId a, const AxiomVerdict& verdict) {
  if (verdict.holds) return false;
  const std::size_t n = r.size();
  auto get = [&](std::string_view role) -> std::size_t {
    auto i = verdict.at(role);
    return i && *i < n ? *i : n;
  };
  const std::size_t u = get("u"), v = get("v"), w = get("w"), x = get("x"), y = get("y"), z = get("z");
  auto valid = [n](std::initializer_list<std::size_t> ids) {
    return std::all_of(ids.begin(), ids.end(), [n](std::size_t i) { return i < n; });
  };
  auto in = [&](std::size_t e, std::size_t p, std::size_t q) { return r(p, q).contains(e); };

  switch (a) {
    case AxiomId::b1:
      return valid({u, v, x}) && in(x, u, v) && x != v && in(v, u, x);
    case AxiomId::b3:
      return valid({u, v, x, y}) && in(x, u, v) && in(y, u, x) && !in(x, y, v);
    case AxiomId::m:
      return valid({u, v, x, y, z}) && in(x, u, v) && in(y, u, v) && in(z, x, y) && !in(z, u, v);
    case AxiomId::j0: {
      if (!valid({u, v, x, y})) return false;
      const bool distinct = u != v && u != x && u != y && v != x && v != y && x != y;
      return distinct && in(x, u, y) && in(y, x, v) && !in(x, u, v);
    }
    case AxiomId::ch:
      return valid({u, v, w, x, y}) && in(x, u, v) && in(y, x, w) && !in(y, u, w) &&
             !in(y, v, w) && !in(y, u, v);
    case AxiomId::p: {
      if (!valid({u, v, w, x, y}) || !in(x, u, v) || !in(y, x, w)) return false;
      for (std::size_t zz = 0; zz < n; ++zz) {
        if (in(zz, u, w) && in(y, zz, v)) return false;
      }
      return true;
    }
    case AxiomId::a_prime:
      for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = 0; q < n; ++q) {
          if (r(p, q) == r.full()) return false;
        }
      }
      return true;
    case AxiomId::k: {
      if (!valid({u, v, x, y})) return false;
      const Subset meet = r(u, v) & r(x, y);
      if (meet.empty()) return false;
      for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = 0; q < n; ++q) {
          if (r(p, q) == meet) return false;
        }
      }
      return true;
    }
    case AxiomId::cg: {
      if (!valid({x, y})) return false;
      const Subset s = r(x, y);
      if (s == r.full()) return false;
      for (std::size_t zz : s) {
        for (std::size_t ww = 0; ww < n; ++ww) {
          if (!s.contains(ww) && r(ww, zz) == s.with(ww)) return false;
        }
      }
      return true;
    }
  }
  return false;
}

AxiomProfile axiom_profile(const TransitFunction& r) {
  AxiomProfile profile;
  for (AxiomId a : kAllAxioms) profile[a] = check_axiom(r, a);
  return profile;
}

}  // namespace transit
