#include "hodge/search_oracle.hpp"

#include <future>
#include <limits>

#include "hodge/errors.hpp"
#include "wide_int.hpp"

namespace hodge {

std::string to_string(ConstraintMode mode) {
  return mode == ConstraintMode::PaperMonotone ? "paper" : "conservative";
}

std::uint64_t search_space_size(const HodgeSystem& sys) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t size = 1;
  for (const auto& c : sys.components()) {
    const auto factor = static_cast<std::uint64_t>(c.rank()) + 1;
    if (size > kMax / factor) return kMax;
    size *= factor;
  }
  return size;
}

namespace {

// Degree bound per (index, rank), computed once per search.
struct Bounds {
  std::vector<std::vector<std::int64_t>> degree;  // degree[i][rank]
  std::vector<std::int64_t> rank;                 // rk E_i
  std::int64_t total_rank = 0;
  std::int64_t d = 1;
  ConstraintMode mode{};
};

Bounds prepare(const HodgeSystem& sys, const SearchOptions& opts) {
  if (!sys.isomorphisms())
    throw InvalidInput("oracle requires isomorphism structure");
  for (std::size_t i = 0; i <= sys.top(); ++i) {
    const auto& c = sys.component(i);
    const bool ok = opts.subsheaf == SubsheafMode::Semistable
                        ? c.flagged_semistable()
                        : c.flagged_stable();
    if (!ok)
      throw InvalidInput("oracle: component E_" + std::to_string(i) +
                         " not flagged " + to_string(opts.subsheaf));
  }
  const auto size = search_space_size(sys);
  if (size > opts.budget)
    throw BudgetExceeded("search space " + std::to_string(size) +
                         " exceeds budget " + std::to_string(opts.budget));

  Bounds b;
  b.d = sys.context().dim;
  b.mode = opts.mode;
  for (const auto& c : sys.components()) {
    std::vector<std::int64_t> row(static_cast<std::size_t>(c.rank()) + 1, 0);
    for (std::int64_t r = 1; r <= c.rank(); ++r)
      row[static_cast<std::size_t>(r)] =
          max_subsheaf_degree(r, c, opts.subsheaf);
    b.degree.push_back(std::move(row));
    b.rank.push_back(c.rank());
    b.total_rank = checked::add(b.total_rank, c.rank());
  }
  return b;
}

std::int64_t rank_cap(const Bounds& b, std::size_t i, std::int64_t prev) {
  const std::int64_t chain =
      b.mode == ConstraintMode::PaperMonotone ? prev : checked::mul(b.d, prev);
  return std::min(chain, b.rank[i]);
}

// Pre-order DFS; ranks ascend at each level, which is lexicographic order
// on the entry list because the degree is a function of the rank.
template <typename Visit>
void dfs(const Bounds& b, std::vector<ProfileEntry>& prefix,
         std::int64_t sum_rank, Visit& visit) {
  const std::size_t i = prefix.size();
  if (i >= b.rank.size()) return;
  const std::int64_t cap =
      i == 0 ? b.rank[0] : rank_cap(b, i, prefix.back().rank);
  for (std::int64_t r = 1; r <= cap; ++r) {
    prefix.push_back({r, b.degree[i][static_cast<std::size_t>(r)]});
    const auto rank_now = sum_rank + r;
    if (rank_now < b.total_rank) visit(std::span<const ProfileEntry>(prefix));
    dfs(b, prefix, rank_now, visit);
    prefix.pop_back();
  }
}

// Running maximum with integer sums; slopes compared by cross
// multiplication in 128 bits.
struct Best {
  std::vector<ProfileEntry> entries;
  std::int64_t deg = 0;
  std::int64_t rank = 0;
  std::uint64_t count = 0;

  bool empty() const { return entries.empty(); }

  void offer(std::span<const ProfileEntry> p) {
    ++count;
    std::int64_t r = 0, g = 0;
    for (const auto& e : p) {
      r += e.rank;
      g += e.degree;
    }
    if (empty() || static_cast<detail::Int128>(g) * rank >
                       static_cast<detail::Int128>(deg) * r) {
      entries.assign(p.begin(), p.end());
      deg = g;
      rank = r;
    }
  }

  // `later` covers a lexicographically later subtree.
  void merge(const Best& later) {
    count += later.count;
    if (later.empty()) return;
    if (empty() || static_cast<detail::Int128>(later.deg) * rank >
                       static_cast<detail::Int128>(deg) * later.rank) {
      entries = later.entries;
      deg = later.deg;
      rank = later.rank;
    }
  }
};

Best search_subtree(const Bounds& b, std::int64_t f0_rank) {
  Best best;
  std::vector<ProfileEntry> prefix{
      {f0_rank, b.degree[0][static_cast<std::size_t>(f0_rank)]}};
  auto visit = [&](std::span<const ProfileEntry> p) { best.offer(p); };
  if (f0_rank < b.total_rank) visit(std::span<const ProfileEntry>(prefix));
  dfs(b, prefix, f0_rank, visit);
  return best;
}

}  // namespace

std::uint64_t visit_profiles(const HodgeSystem& sys, const SearchOptions& opts,
                             const ProfileVisitor& visit) {
  const auto b = prepare(sys, opts);
  std::uint64_t count = 0;
  auto counting = [&](std::span<const ProfileEntry> p) {
    ++count;
    visit(p);
  };
  std::vector<ProfileEntry> prefix;
  prefix.reserve(b.rank.size());
  dfs(b, prefix, 0, counting);
  return count;
}

std::vector<SubsystemProfile> enumerate_profiles(const HodgeSystem& sys,
                                                 const SearchOptions& opts) {
  std::vector<SubsystemProfile> out;
  visit_profiles(sys, opts, [&](std::span<const ProfileEntry> p) {
    out.emplace_back(std::vector<ProfileEntry>(p.begin(), p.end()));
  });
  return out;
}

std::optional<MaxSlopeResult> max_slope_profile(const HodgeSystem& sys,
                                                const SearchOptions& opts) {
  const auto b = prepare(sys, opts);
  const auto roots = b.rank[0];

  Best best;
  if (opts.parallel && roots > 1) {
    std::vector<std::future<Best>> parts;
    parts.reserve(static_cast<std::size_t>(roots));
    for (std::int64_t r = 1; r <= roots; ++r)
      parts.push_back(std::async(std::launch::async, search_subtree,
                                 std::cref(b), r));
    for (auto& f : parts) best.merge(f.get());
  } else {
    for (std::int64_t r = 1; r <= roots; ++r) best.merge(search_subtree(b, r));
  }
  if (best.empty()) return std::nullopt;
  return MaxSlopeResult{SubsystemProfile(std::move(best.entries)),
                        Rational(best.deg, best.rank), best.count};
}

Verdict verdict_from_search(const HodgeSystem& sys, const SearchOptions& opts) {
  if (!sys.isomorphisms())
    throw InvalidInput("oracle requires isomorphism structure");
  if (!sys.all_flagged_semistable())
    throw InvalidInput("oracle requires every component flagged semistable");

  const auto mu = total_slope(sys);
  auto ss_opts = opts;
  ss_opts.subsheaf = SubsheafMode::Semistable;
  const auto best_ss = max_slope_profile(sys, ss_opts);

  Verdict v;
  v.provenance = "oracle: " + to_string(opts.mode) + " profiles";
  auto certify = [&](const MaxSlopeResult& r) {
    v.certificate = Certificate{r.profile, r.slope, mu};
  };

  if (best_ss && best_ss->slope > mu) {
    v.semistable = Tri::No;
    v.stable = Tri::No;
    certify(*best_ss);
  } else {
    v.semistable = Tri::Yes;
    if (sys.all_flagged_stable()) {
      auto st_opts = opts;
      st_opts.subsheaf = SubsheafMode::Stable;
      const auto best_st = max_slope_profile(sys, st_opts);
      v.provenance += ", stable bounds";
      if (best_st && best_st->slope >= mu) {
        v.stable = Tri::No;
        certify(*best_st);
      } else {
        v.stable = Tri::Yes;
      }
    } else if (best_ss && best_ss->slope == mu) {
      v.stable = Tri::No;
      certify(*best_ss);
    } else {
      v.stable = Tri::Yes;
    }
  }
  v.validate();
  return v;
}

Verdict check_declared(const HodgeSystem& sys,
                       const SubsystemProfile& profile) {
  if (profile.size() > sys.components().size())
    throw InvalidInput("declared profile extends past E_n");
  for (std::size_t i = 0; i < profile.size(); ++i) {
    const auto& f = profile[i];
    const auto& e = sys.component(i);
    if (f.rank > e.rank())
      throw InvalidInput("rank domination violated at index " +
                         std::to_string(i));
    std::optional<std::int64_t> bound;
    if (e.flagged_stable())
      bound = max_subsheaf_degree(f.rank, e, SubsheafMode::Stable);
    else if (e.flagged_semistable())
      bound = max_subsheaf_degree(f.rank, e, SubsheafMode::Semistable);
    if (bound && f.degree > *bound)
      throw InvalidInput("declared degree at index " + std::to_string(i) +
                         " exceeds the subsheaf bound " +
                         std::to_string(*bound));
  }

  Verdict v;
  const auto mu = total_slope(sys);
  const auto s = profile.slope();
  if (profile.total_rank() >= sys.total().rank()) {
    v.provenance = "declared subobject is not proper";
    return v;
  }
  v.provenance = "declared invariant subobject";
  if (s > mu) {
    v.semistable = Tri::No;
    v.stable = Tri::No;
    v.certificate = Certificate{profile, s, mu};
  } else if (s == mu) {
    v.stable = Tri::No;
    v.certificate = Certificate{profile, s, mu};
  }
  v.validate();
  return v;
}

bool admissible_ranks(const HodgeSystem& sys, const SubsystemProfile& profile,
                      ConstraintMode mode) {
  if (profile.size() > sys.components().size()) return false;
  const auto d = sys.context().dim;
  for (std::size_t i = 0; i < profile.size(); ++i) {
    if (profile[i].rank > sys.component(i).rank()) return false;
    if (i == 0) continue;
    const auto prev = profile[i - 1].rank;
    const auto cap = mode == ConstraintMode::PaperMonotone ? prev : d * prev;
    if (profile[i].rank > cap) return false;
  }
  return true;
}

ModeComparison compare_modes(const HodgeSystem& sys, SubsheafMode subsheaf,
                             std::uint64_t budget) {
  SearchOptions opts{ConstraintMode::PaperMonotone, subsheaf, budget, false};
  ModeComparison cmp{max_slope_profile(sys, opts), std::nullopt,
                     total_slope(sys)};
  opts.mode = ConstraintMode::Conservative;
  cmp.conservative = max_slope_profile(sys, opts);
  return cmp;
}

}  // namespace hodge
