#include "sedfkit/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <thread>

#include "sedfkit/exact_cover.hpp"

namespace sedfkit {

namespace {

struct Params {
  Int a;
  Int v;
  Int v0;    // T ranges over subsets of {1, ..., v0}
  Int a0;    // |T|
  Int rows;  // |pair universe|
  bool odd;
};

Params params_for(Int a) {
  if (a < 1) throw Error("a must be at least 1, got " + std::to_string(a));
  const Int v = a * a + 1;
  const bool odd = a % 2 == 1;
  const Int v0 = (v - 1) / 2;
  return {a, v, v0, a / 2, odd ? v / 2 : v0, odd};
}

// Unit filter on the pair-index form of a candidate. For symmetric A the
// sorted list starts with T (after 0 for odd a), so mA <lex A iff the sorted
// pair indices of mT are lex-less than T.
class UnitFilter {
 public:
  explicit UnitFilter(const Params& p) : v_(p.v), inverse_(p.v0 + 1, 0), gcd_(p.v0 + 1, 0) {
    for (Int m : units(p.v)) {
      if (2 * m < p.v) half_units_.push_back(m);
    }
    for (Int t = 1; t <= p.v0; ++t) {
      gcd_[t] = std::gcd(t, p.v);
      if (gcd_[t] == 1) inverse_[t] = *mod_inverse(t, p.v);
    }
    image_.resize(p.a0);
  }

  // Necessary conditions usable on a prefix: T[0] must be the least element
  // of its unit orbit, and no element may have an orbit reaching below T[0].
  bool first_ok(Int t0) const { return gcd_[t0] == t0; }
  bool member_ok(Int t0, Int t) const { return gcd_[t] >= t0; }

  bool accepts(std::span<const Int> t) const {
    if (t.empty()) return true;
    if (t[0] == 1) {
      // an image below T must contain 1, i.e. m = +-t^-1 for a unit t in T
      for (Int x : t) {
        if (inverse_[x] != 0 && smaller_image(t, inverse_[x])) return false;
      }
      return true;
    }
    for (Int m : half_units_) {
      if (smaller_image(t, m)) return false;
    }
    return true;
  }

 private:
  bool smaller_image(std::span<const Int> t, Int m) const {
    const std::size_t k = t.size();
    for (std::size_t i = 0; i < k; ++i) {
      Int y = pair_index(m * t[i], v_);
      std::size_t j = i;
      while (j > 0 && image_[j - 1] > y) {
        image_[j] = image_[j - 1];
        --j;
      }
      image_[j] = y;
    }
    for (std::size_t i = 0; i < k; ++i) {
      if (image_[i] != t[i]) return image_[i] < t[i];
    }
    return false;
  }

  Int v_;
  std::vector<Int> half_units_;  // multiplying by -m gives the same pair image
  std::vector<Int> inverse_;
  std::vector<Int> gcd_;
  mutable std::vector<Int> image_;
};

// Candidate T sets sharded by their first (up to) two elements.
class CandidateSource {
 public:
  CandidateSource(const Params& p, bool filter) : p_(p), filter_(filter), unit_filter_(p) {
    const std::size_t prefix_len = static_cast<std::size_t>(std::min<Int>(p.a0, 2));
    if (prefix_len == 0) {
      shards_.push_back({});
      return;
    }
    for (Int t0 = 1; t0 <= p.v0; ++t0) {
      if (filter_ && !unit_filter_.first_ok(t0)) continue;
      if (prefix_len == 1) {
        shards_.push_back({t0});
        continue;
      }
      for (Int t1 = t0 + 1; t1 <= p.v0; ++t1) {
        if (filter_ && !unit_filter_.member_ok(t0, t1)) continue;
        shards_.push_back({t0, t1});
      }
    }
  }

  std::size_t shard_count() const { return shards_.size(); }

  // Calls on_t(T) for every filtered T in the shard, in lex order.
  template <class F>
  bool run_shard(std::size_t shard, F&& on_t) const {
    const std::vector<Int>& prefix = shards_[shard];
    std::vector<Int> t(prefix);
    const std::size_t need = static_cast<std::size_t>(p_.a0) - prefix.size();
    std::vector<Int> pool;
    if (need > 0) {
      for (Int x = prefix.back() + 1; x <= p_.v0; ++x) {
        if (!filter_ || unit_filter_.member_ok(prefix.front(), x)) pool.push_back(x);
      }
    }
    if (pool.size() < need) return true;
    std::vector<std::size_t> idx(need);
    std::iota(idx.begin(), idx.end(), 0);
    t.resize(p_.a0);
    for (;;) {
      for (std::size_t i = 0; i < need; ++i) t[prefix.size() + i] = pool[idx[i]];
      if (!filter_ || unit_filter_.accepts(t)) {
        if (!on_t(std::span<const Int>(t))) return false;
      }
      // next combination of `need` indices from pool
      std::size_t i = need;
      while (i > 0 && idx[i - 1] == pool.size() - need + i - 1) --i;
      if (i == 0) return true;
      ++idx[i - 1];
      for (std::size_t j = i; j < need; ++j) idx[j] = idx[j - 1] + 1;
    }
  }

 private:
  Params p_;
  bool filter_;
  UnitFilter unit_filter_;
  std::vector<std::vector<Int>> shards_;
};

std::vector<Int> a_pairs_from_t(const Params& p, std::span<const Int> t) {
  std::vector<Int> pairs;
  if (p.odd) pairs.push_back(0);
  pairs.insert(pairs.end(), t.begin(), t.end());
  return pairs;
}

// Column-wise sparse form of M_A, rebuilt per candidate into reused storage.
struct MatrixWorkspace {
  std::vector<char> in_a;
  std::vector<Int> cols;
  std::vector<std::vector<std::pair<int, int>>> col_entries;  // (row index, value)
  std::vector<int> row_cover;
  ExactCover solver;
  std::vector<int> items;

  void fill(const Params& p, const std::vector<Int>& a_pairs) {
    in_a.assign(p.rows + 1, 0);
    for (Int x : a_pairs) {
      if (x <= p.rows) in_a[x] = 1;
    }
    cols.clear();
    for (Int y = 1; y <= p.rows; ++y) {
      if (!in_a[y]) cols.push_back(y);
    }
    if (col_entries.size() < cols.size()) col_entries.resize(cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
      auto& ent = col_entries[c];
      ent.clear();
      const Int y = cols[c];
      auto bump = [&ent](int row) {
        for (auto& e : ent) {
          if (e.first == row) {
            ++e.second;
            return;
          }
        }
        ent.emplace_back(row, 1);
      };
      for (Int x : a_pairs) {
        Int d1 = pair_index(x + y, p.v);
        Int d2 = pair_index(x - y, p.v);
        if (d1 == 0 || d2 == 0) throw Error("column P_" + std::to_string(y) + " lies inside A");
        bump(static_cast<int>(d1 - 1));
        if (d2 != d1) bump(static_cast<int>(d2 - 1));
      }
    }
  }

  static bool has_two(const std::vector<std::pair<int, int>>& ent) {
    return std::any_of(ent.begin(), ent.end(), [](const auto& e) { return e.second > 1; });
  }

  // Exact covers over the 0/1 columns; nothing is reported when a row cannot be covered.
  template <class F>
  void solve(const Params& p, bool preselect_half, F&& on_cover) {
    const int n_rows = static_cast<int>(p.rows);
    std::vector<char> usable(cols.size(), 0);
    for (std::size_t c = 0; c < cols.size(); ++c) usable[c] = !has_two(col_entries[c]);

    // rows already covered by a forced column (odd a, P_{v/2})
    std::vector<char> forced_row(n_rows, 0);
    std::optional<std::size_t> forced;
    if (preselect_half && p.odd) {
      auto it = std::find(cols.begin(), cols.end(), p.rows);
      if (it == cols.end()) return;
      std::size_t c = static_cast<std::size_t>(it - cols.begin());
      if (!usable[c]) return;
      forced = c;
      for (const auto& e : col_entries[c]) forced_row[e.first] = 1;
      for (std::size_t o = 0; o < cols.size(); ++o) {
        if (o == c || !usable[o]) continue;
        for (const auto& e : col_entries[o]) {
          if (forced_row[e.first]) {
            usable[o] = 0;
            break;
          }
        }
      }
      usable[c] = 0;
    }

    row_cover.assign(n_rows, 0);
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (!usable[c]) continue;
      for (const auto& e : col_entries[c]) ++row_cover[e.first];
    }
    std::vector<int> item_of(n_rows, -1);
    int n_items = 0;
    for (int r = 0; r < n_rows; ++r) {
      if (forced_row[r]) continue;
      if (row_cover[r] == 0) return;  // uncoverable row
      item_of[r] = n_items++;
    }

    solver.reset(n_items);
    std::vector<std::size_t> option_col;
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (!usable[c]) continue;
      items.clear();
      for (const auto& e : col_entries[c]) items.push_back(item_of[e.first]);
      solver.add_option(items);
      option_col.push_back(c);
    }
    std::vector<Int> chosen;
    solver.solve([&](std::span<const int> options) {
      chosen.clear();
      if (forced) chosen.push_back(cols[*forced]);
      for (int o : options) chosen.push_back(cols[option_col[o]]);
      std::sort(chosen.begin(), chosen.end());
      on_cover(chosen);
      return true;
    });
  }
};

using ClassKey = std::pair<std::vector<Int>, std::vector<Int>>;

void record_class(std::map<ClassKey, SedfClass>& classes, SedfClass cls) {
  ClassKey key{cls.canonical.set_a().elements(), cls.canonical.set_b().elements()};
  auto [it, inserted] = classes.try_emplace(std::move(key), cls);
  if (!inserted && lex_compare(cls.symmetric, it->second.symmetric) < 0) it->second = std::move(cls);
}

}  // namespace

ResidueSet SymmetricPair::elements() const { return ResidueSet(modulus, {index, mod(-index, modulus)}); }

std::vector<Int> pair_indices(const ResidueSet& symmetric_set) {
  std::vector<Int> out;
  for (Int x : symmetric_set) out.push_back(pair_index(x, symmetric_set.modulus()));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ResidueSet union_of_pairs(const std::vector<Int>& indices, Int v) {
  std::vector<Int> elems;
  for (Int x : indices) {
    elems.push_back(mod(x, v));
    elems.push_back(mod(-x, v));
  }
  return {v, std::move(elems)};
}

std::vector<SymmetricPair> pair_universe(Int a) {
  Params p = params_for(a);
  std::vector<SymmetricPair> out;
  for (Int x = 1; x <= p.rows; ++x) out.push_back({x, p.v});
  return out;
}

bool passes_unit_filter(const ResidueSet& a_set) {
  for (Int m : units(a_set.modulus())) {
    ResidueSet image = apply_affine(AffineMap(m, 0, a_set.modulus()), a_set);
    if (lex_compare(image, a_set) < 0) return false;
  }
  return true;
}

void for_each_candidate(Int a, const CandidateOptions& options,
                        const std::function<bool(const ResidueSet&)>& visit) {
  Params p = params_for(a);
  CandidateSource source(p, options.unit_filter);
  for (std::size_t s = 0; s < source.shard_count(); ++s) {
    bool more = source.run_shard(s, [&](std::span<const Int> t) {
      return visit(union_of_pairs(a_pairs_from_t(p, t), p.v));
    });
    if (!more) return;
  }
}

std::vector<ResidueSet> candidate_sets(Int a, const CandidateOptions& options) {
  std::vector<ResidueSet> out;
  for_each_candidate(a, options, [&](const ResidueSet& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

int KmMatrix::entry(Int row_pair, Int col_pair) const {
  auto r = std::find(rows.begin(), rows.end(), row_pair);
  auto c = std::find(cols.begin(), cols.end(), col_pair);
  if (r == rows.end() || c == cols.end()) {
    throw Error("no entry (P_" + std::to_string(row_pair) + ", P_" + std::to_string(col_pair) + ")");
  }
  return at(static_cast<std::size_t>(r - rows.begin()), static_cast<std::size_t>(c - cols.begin()));
}

KmMatrix build_matrix(const std::vector<Int>& a_pairs, Int a) {
  Params p = params_for(a);
  for (Int x : a_pairs) {
    if (x < 0 || x > p.rows) throw Error("pair index " + std::to_string(x) + " out of range");
  }
  MatrixWorkspace ws;
  ws.fill(p, a_pairs);
  KmMatrix m;
  m.a = a;
  for (Int d = 1; d <= p.rows; ++d) m.rows.push_back(d);
  m.cols = ws.cols;
  m.entries.assign(m.rows.size() * m.cols.size(), 0);
  for (std::size_t c = 0; c < m.cols.size(); ++c) {
    for (const auto& [row, value] : ws.col_entries[c]) {
      m.entries[static_cast<std::size_t>(row) * m.cols.size() + c] = static_cast<std::uint8_t>(value);
    }
  }
  return m;
}

std::vector<std::vector<Int>> solve_exact_cover(const KmMatrix& m) {
  const std::size_t n_rows = m.rows.size();
  const std::size_t n_cols = m.cols.size();
  std::vector<std::size_t> kept;
  for (std::size_t c = 0; c < n_cols; ++c) {
    bool two = false;
    for (std::size_t r = 0; r < n_rows; ++r) two = two || m.at(r, c) > 1;
    if (!two) kept.push_back(c);
  }
  std::vector<std::vector<Int>> out;
  for (std::size_t r = 0; r < n_rows; ++r) {
    bool coverable = false;
    for (std::size_t c : kept) coverable = coverable || m.at(r, c) == 1;
    if (!coverable) return out;
  }
  ExactCover solver(static_cast<int>(n_rows));
  std::vector<int> items;
  for (std::size_t c : kept) {
    items.clear();
    for (std::size_t r = 0; r < n_rows; ++r) {
      if (m.at(r, c) == 1) items.push_back(static_cast<int>(r));
    }
    solver.add_option(items);
  }
  solver.solve([&](std::span<const int> options) {
    std::vector<Int> chosen;
    for (int o : options) chosen.push_back(m.cols[kept[o]]);
    out.push_back(std::move(chosen));
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ResidueSet> mates(const ResidueSet& a_set, Int a) {
  Params p = params_for(a);
  if (a_set.modulus() != p.v) throw ModulusMismatch(a_set.modulus(), p.v);
  if (!is_symmetric(a_set)) throw Error("A = " + to_string(a_set) + " is not closed under negation");
  std::vector<ResidueSet> out;
  for (const auto& cover : solve_exact_cover(build_matrix(pair_indices(a_set), a))) {
    ResidueSet b = union_of_pairs(cover, p.v);
    ValidityReport check = verify_sedf(Sedf(a_set, b));
    if (!check) throw Error("exact cover produced a non-mate " + to_string(b) + ": " + check.reason);
    out.push_back(std::move(b));
  }
  return out;
}

EnumerationReport enumerate_sedfs(Int a, const EnumerationOptions& options) {
  const auto started = std::chrono::steady_clock::now();
  const Params p = params_for(a);
  const CandidateSource source(p, options.unit_filter);

  struct WorkerResult {
    std::map<ClassKey, SedfClass> classes;
    std::uint64_t candidates = 0;
    std::uint64_t solutions = 0;
  };

  std::atomic<std::size_t> next_shard{0};
  auto work = [&](WorkerResult& result) {
    MatrixWorkspace ws;
    for (;;) {
      const std::size_t shard = next_shard.fetch_add(1);
      if (shard >= source.shard_count()) return;
      source.run_shard(shard, [&](std::span<const Int> t) {
        ++result.candidates;
        const std::vector<Int> a_pairs = a_pairs_from_t(p, t);
        ws.fill(p, a_pairs);
        ws.solve(p, options.preselect_half_pair, [&](const std::vector<Int>& cover) {
          ++result.solutions;
          Sedf sym(union_of_pairs(a_pairs, p.v), union_of_pairs(cover, p.v));
          ValidityReport check = verify_sedf(sym);
          if (!check) throw Error("exact cover produced a non-SEDF " + to_string(sym) + ": " + check.reason);
          CanonicalForm canon = canonical_form(sym);
          record_class(result.classes, {std::move(canon.sedf), std::move(sym), canon.witness});
        });
        return true;
      });
    }
  };

  const int workers = std::max(1, options.workers);
  std::vector<WorkerResult> results(workers);
  if (workers == 1) {
    work(results[0]);
  } else {
    std::vector<std::thread> threads;
    std::vector<std::exception_ptr> errors(workers);
    for (int w = 0; w < workers; ++w) {
      threads.emplace_back([&, w] {
        try {
          work(results[w]);
        } catch (...) {
          errors[w] = std::current_exception();
          next_shard.store(source.shard_count());
        }
      });
    }
    for (auto& th : threads) th.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  EnumerationReport report;
  report.a = a;
  std::map<ClassKey, SedfClass> merged;
  for (auto& r : results) {
    report.candidate_count += r.candidates;
    report.solution_count += r.solutions;
    for (auto& [key, cls] : r.classes) record_class(merged, std::move(cls));
  }
  for (auto& [key, cls] : merged) report.classes.push_back(std::move(cls));
  report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - started);
  return report;
}

std::vector<std::vector<Int>> ordered_factorizations(Int n) {
  if (n < 1) throw Error("cannot factor " + std::to_string(n));
  if (n == 1) return {{}};
  std::vector<std::vector<Int>> out;
  for (Int d = 2; d <= n; ++d) {
    if (n % d != 0) continue;
    for (auto rest : ordered_factorizations(n / d)) {
      rest.insert(rest.begin(), d);
      out.push_back(std::move(rest));
    }
  }
  return out;
}

std::vector<BlowupSequence> alternating_sequences(Int a) {
  const auto factorizations = ordered_factorizations(a);
  auto interleave = [](const std::vector<Int>& lead, BlowupKind lead_kind, const std::vector<Int>& follow,
                       BlowupKind follow_kind) {
    BlowupSequence seq;
    for (std::size_t i = 0; i < lead.size(); ++i) {
      seq.push_back({lead_kind, lead[i]});
      if (i < follow.size()) seq.push_back({follow_kind, follow[i]});
    }
    return seq;
  };
  auto ells = [](const BlowupSequence& s) {
    std::vector<Int> out;
    for (const auto& step : s) out.push_back(step.ell);
    return out;
  };
  std::vector<BlowupSequence> out;
  for (BlowupKind lead_kind : {BlowupKind::II, BlowupKind::I}) {
    const BlowupKind follow_kind = lead_kind == BlowupKind::II ? BlowupKind::I : BlowupKind::II;
    std::vector<BlowupSequence> group;
    for (const auto& lead : factorizations) {
      for (const auto& follow : factorizations) {
        if (lead.empty() && lead_kind == BlowupKind::I) continue;  // already listed
        if (lead.size() == follow.size() || lead.size() == follow.size() + 1) {
          group.push_back(interleave(lead, lead_kind, follow, follow_kind));
        }
      }
    }
    std::sort(group.begin(), group.end(), [&](const BlowupSequence& x, const BlowupSequence& y) {
      if (x.size() != y.size()) return x.size() < y.size();
      return ells(x) < ells(y);
    });
    group.erase(std::unique(group.begin(), group.end()), group.end());
    out.insert(out.end(), group.begin(), group.end());
  }
  return out;
}

std::vector<CoverageMatch> alpha_coverage(const EnumerationReport& report) {
  // A sequence whose composed SEDF already is the canonical form beats one
  // that only reaches it through an affine map.
  std::map<ClassKey, std::pair<BlowupSequence, bool>> witness;
  for (const BlowupSequence& seq : alternating_sequences(report.a)) {
    Sedf composed = to_sedf(compose(seq));
    Sedf canon = canonical_form(composed).sedf;
    const bool exact = composed == canon;
    auto [it, inserted] =
        witness.try_emplace(ClassKey{canon.set_a().elements(), canon.set_b().elements()}, seq, exact);
    if (!inserted && exact && !it->second.second) it->second = {seq, true};
  }
  std::vector<CoverageMatch> out;
  for (const SedfClass& cls : report.classes) {
    auto it = witness.find({cls.canonical.set_a().elements(), cls.canonical.set_b().elements()});
    out.push_back({cls.canonical, it == witness.end() ? std::nullopt
                                                      : std::optional<BlowupSequence>(it->second.first)});
  }
  return out;
}

}  // namespace sedfkit
