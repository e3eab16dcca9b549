#include "sedfkit/valuation.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "sedfkit/sedf.hpp"

namespace sedfkit {

namespace {

bool strictly_increasing(const std::vector<Int>& xs) {
  return std::adjacent_find(xs.begin(), xs.end(), std::greater_equal<>()) == xs.end();
}

// Length of the run of consecutive integers in `sorted` that ends at index `last`.
Int run_ending_at(const std::vector<Int>& sorted, std::size_t last) {
  Int len = 1;
  while (last >= static_cast<std::size_t>(len) && sorted[last - len] == sorted[last] - len) ++len;
  return len;
}

Int run_starting_at(const std::vector<Int>& sorted, std::size_t first) {
  Int len = 1;
  while (first + len < sorted.size() && sorted[first + len] == sorted[first] + len) ++len;
  return len;
}

bool all_multiples(const std::vector<Int>& xs, Int ell) {
  return std::all_of(xs.begin(), xs.end(), [ell](Int x) { return x % ell == 0; });
}

// Every element belongs to a block [m, m + ell) with m a multiple of ell and
// the block is fully present; `offset` = 0 gives runs starting at multiples,
// offset = ell - 1 gives runs ending at multiples.
bool aligned_runs(const std::vector<Int>& xs, Int ell, Int offset) {
  if (xs.size() % ell != 0) return false;
  for (std::size_t i = 0; i < xs.size(); i += ell) {
    Int start = xs[i];
    if ((start + offset) % ell != 0) return false;
    for (Int j = 1; j < ell; ++j) {
      if (xs[i + j] != start + j) return false;
    }
  }
  return true;
}

}  // namespace

Valuation Valuation::from_sides(std::vector<Int> small, std::vector<Int> large) {
  std::sort(small.begin(), small.end());
  std::sort(large.begin(), large.end());
  Int a = static_cast<Int>(small.size());
  Int b = static_cast<Int>(large.size());
  return {a, b, std::move(small), std::move(large)};
}

ValidityReport verify_valuation(const Valuation& v) {
  if (v.a < 1 || v.b < 1) return ValidityReport::fail("a and b must be positive");
  if (static_cast<Int>(v.small.size()) != v.a) {
    return ValidityReport::fail("small side has " + std::to_string(v.small.size()) +
                                " labels, expected " + std::to_string(v.a));
  }
  if (static_cast<Int>(v.large.size()) != v.b) {
    return ValidityReport::fail("large side has " + std::to_string(v.large.size()) +
                                " labels, expected " + std::to_string(v.b));
  }
  if (!strictly_increasing(v.small) || !strictly_increasing(v.large)) {
    return ValidityReport::fail("labels must be strictly increasing on each side");
  }
  const Int n = v.edges();
  if (v.small.front() < 0 || v.large.back() > n) {
    return ValidityReport::fail("labels must lie in [0, " + std::to_string(n) + "]");
  }
  if (v.small.back() >= v.large.front()) {
    return ValidityReport::fail("max(small) = " + std::to_string(v.small.back()) +
                                " is not below min(large) = " + std::to_string(v.large.front()));
  }
  std::vector<char> seen(n + 1, 0);
  for (Int u : v.large) {
    for (Int w : v.small) {
      Int d = u - w;
      if (seen[d]) {
        return ValidityReport::fail("difference " + std::to_string(d) + " repeats (" +
                                    std::to_string(u) + " - " + std::to_string(w) + ")");
      }
      seen[d] = 1;
    }
  }
  // ab distinct differences in [1, ab] leave nothing missing; kept for the report.
  for (Int d = 1; d <= n; ++d) {
    if (!seen[d]) return ValidityReport::fail("difference " + std::to_string(d) + " missing");
  }
  return ValidityReport::ok();
}

Valuation phi(const Valuation& v) {
  const Int n = v.edges();
  std::vector<Int> small, large;
  small.reserve(v.large.size());
  large.reserve(v.small.size());
  for (auto it = v.large.rbegin(); it != v.large.rend(); ++it) small.push_back(n - *it);
  for (auto it = v.small.rbegin(); it != v.small.rend(); ++it) large.push_back(n - *it);
  return {v.b, v.a, std::move(small), std::move(large)};
}

bool valuations_equivalent(const Valuation& v1, const Valuation& v2) {
  bool same_graph = (v1.a == v2.a && v1.b == v2.b) || (v1.a == v2.b && v1.b == v2.a);
  if (!same_graph) {
    throw Error("valuations of K_{" + std::to_string(v1.a) + "," + std::to_string(v1.b) +
                "} and K_{" + std::to_string(v2.a) + "," + std::to_string(v2.b) +
                "} cannot be compared");
  }
  return v1 == v2 || phi(v1) == v2;
}

Valuation blowup(const Valuation& v, BlowupStep step) {
  const Int ell = step.ell;
  if (ell < 2) throw Error("blowup requires ell >= 2, got " + std::to_string(ell));
  Valuation out;
  if (step.kind == BlowupKind::I) {
    out.a = v.a * ell;
    out.b = v.b;
    out.small.reserve(out.a);
    for (Int s : v.small) {
      for (Int j = 0; j < ell; ++j) out.small.push_back(ell * s + j);
    }
    for (Int y : v.large) out.large.push_back(ell * y);
  } else {
    out.a = v.a;
    out.b = v.b * ell;
    for (Int s : v.small) out.small.push_back(ell * s);
    out.large.reserve(out.b);
    for (Int y : v.large) {
      for (Int j = ell - 1; j >= 0; --j) out.large.push_back(ell * y - j);
    }
  }
  return out;
}

StructureReport detect_structure(const Valuation& v) {
  if (v.a == 1 && v.b == 1) return {StructureReport::Kind::Trivial, std::nullopt};
  if (v.small.empty() || v.large.empty()) throw StructureError("valuation has an empty side");

  Int ell_i = run_ending_at(v.small, v.small.size() - 1);
  if (ell_i >= 2 && all_multiples(v.large, ell_i) && aligned_runs(v.small, ell_i, 0)) {
    return {StructureReport::Kind::TypeI, ell_i};
  }
  Int ell_ii = run_starting_at(v.large, 0);
  if (ell_ii >= 2 && all_multiples(v.small, ell_ii) && aligned_runs(v.large, ell_ii, ell_ii - 1)) {
    return {StructureReport::Kind::TypeII, ell_ii};
  }
  throw StructureError("valuation " + to_string(v) +
                       " is neither type I nor type II, so it is not an alpha-valuation");
}

Projection project(const Valuation& v, BlowupKind kind) {
  StructureReport report = detect_structure(v);
  const auto wanted =
      kind == BlowupKind::I ? StructureReport::Kind::TypeI : StructureReport::Kind::TypeII;
  if (report.kind != wanted) {
    throw StructureError("valuation " + to_string(v) + " is not of type " + to_string(kind));
  }
  const Int ell = *report.ell;
  Valuation w;
  if (kind == BlowupKind::I) {
    w.a = v.a / ell;
    w.b = v.b;
    for (Int s : v.small) {
      if (s % ell == 0) w.small.push_back(s / ell);
    }
    for (Int y : v.large) w.large.push_back(y / ell);
  } else {
    w.a = v.a;
    w.b = v.b / ell;
    for (Int s : v.small) w.small.push_back(s / ell);
    for (Int y : v.large) {
      if (y % ell == 0) w.large.push_back(y / ell);
    }
  }
  return {std::move(w), ell};
}

BlowupSequence decompose(const Valuation& v) {
  BlowupSequence steps;
  Valuation current = v;
  for (;;) {
    StructureReport report = detect_structure(current);
    if (report.kind == StructureReport::Kind::Trivial) break;
    BlowupKind kind =
        report.kind == StructureReport::Kind::TypeI ? BlowupKind::I : BlowupKind::II;
    Projection p = project(current, kind);
    steps.push_back({kind, p.ell});
    current = std::move(p.valuation);
  }
  if (current != Valuation::trivial()) {
    throw StructureError("projection chain ended at " + to_string(current) + " instead of K_{1,1}");
  }
  std::reverse(steps.begin(), steps.end());
  return steps;
}

Valuation compose(const BlowupSequence& steps) {
  Valuation v = Valuation::trivial();
  for (const BlowupStep& s : steps) v = blowup(v, s);
  return v;
}

Sedf to_sedf(const Valuation& v) {
  if (v.a != v.b) {
    throw Error("a valuation of K_{" + std::to_string(v.a) + "," + std::to_string(v.b) +
                "} gives a generalised SEDF, not an SEDF");
  }
  const Int n = v.a * v.a + 1;
  return {ResidueSet(n, v.small), ResidueSet(n, v.large)};
}

std::string to_string(BlowupKind kind) { return kind == BlowupKind::I ? "I" : "II"; }

std::string format_steps(const BlowupSequence& steps) {
  std::string out;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (i) out += ',';
    out += to_string(steps[i].kind) + ":" + std::to_string(steps[i].ell);
  }
  return out;
}

std::string format_table_sequence(const BlowupSequence& steps) {
  for (std::size_t i = 0; i < steps.size(); ++i) {
    BlowupKind expected = i % 2 == 0 ? BlowupKind::II : BlowupKind::I;
    if (steps[i].kind != expected) return format_steps(steps);
  }
  std::string out = "(";
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(steps[i].ell);
  }
  return out + ")";
}

BlowupSequence parse_sequence(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  auto parse_ell = [&](const std::string& tok) -> Int {
    if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](unsigned char c) { return std::isdigit(c) != 0; })) {
      throw Error("bad blowup factor '" + tok + "' in '" + text + "'");
    }
    Int ell = std::stoll(tok);
    if (ell < 2) throw Error("blowup factor must be >= 2 in '" + text + "'");
    return ell;
  };
  auto split = [](const std::string& body) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : body) {
      if (c == ',') {
        parts.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
    parts.push_back(cur);
    return parts;
  };

  BlowupSequence steps;
  if (!s.empty() && s.front() == '(') {
    if (s.back() != ')') throw Error("unbalanced parentheses in '" + text + "'");
    std::string body = s.substr(1, s.size() - 2);
    if (body.empty()) return steps;
    auto parts = split(body);
    for (std::size_t i = 0; i < parts.size(); ++i) {
      steps.push_back({i % 2 == 0 ? BlowupKind::II : BlowupKind::I, parse_ell(parts[i])});
    }
    return steps;
  }
  if (s.empty()) return steps;
  for (const std::string& part : split(s)) {
    auto colon = part.find(':');
    if (colon == std::string::npos) throw Error("expected KIND:ell in '" + part + "'");
    std::string kind = part.substr(0, colon);
    BlowupKind k;
    if (kind == "I") {
      k = BlowupKind::I;
    } else if (kind == "II") {
      k = BlowupKind::II;
    } else {
      throw Error("unknown blowup kind '" + kind + "'");
    }
    steps.push_back({k, parse_ell(part.substr(colon + 1))});
  }
  return steps;
}

std::string to_string(const Valuation& v) {
  std::ostringstream os;
  auto side = [&os](const std::vector<Int>& xs) {
    os << '{';
    for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
    os << '}';
  };
  os << '(';
  side(v.small);
  os << ", ";
  side(v.large);
  os << ')';
  return os.str();
}

}  // namespace sedfkit
