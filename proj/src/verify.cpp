#include "severi/verify.hpp"

#include <algorithm>
#include <array>
#include <exception>
#include <optional>
#include <random>
#include <sstream>
#include <thread>

#include "severi/intnf.hpp"
#include "severi/severi.hpp"

namespace severi {

namespace {

enum Check : std::size_t {
  kPickZ2,
  kPickM0,
  kWidthOracle,
  kEmptyInterior,
  kCountOracle,
  kInvariantFactors,
  kRotationDuality,
  kWidthOneRank,
  kPickMonotonicity,
  kKernelDimension,
  kSignature,
  kUnimodularInvariance,
  kCheckCount
};

constexpr std::array<const char*, kCheckCount> kCheckNames = {
    "pick_identity_Z2",  "pick_identity_M0",    "width_oracle",      "empty_interior_criterion",
    "count_vs_oracle",   "invariant_factors",   "rotation_duality",  "width_one_rank",
    "pick_monotonicity", "kernel_dimension",    "signature",         "unimodular_invariance"};

constexpr std::size_t kExamplesKept = 5;
constexpr int kMapsPerTrial = 10;
constexpr std::int64_t kTrialBound = 8;

// Outcome of every check on one input; unset entries were not run.
struct Outcome {
  std::array<std::optional<bool>, kCheckCount> status;
  std::array<std::string, kCheckCount> detail;
};

std::string describe(const LatticePolygon& polygon) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < polygon.size(); ++i) {
    const Vec2& v = polygon.vertices()[i];
    os << (i ? "," : "") << "[" << v.x() << "," << v.y() << "]";
  }
  os << "]";
  return os.str();
}

// Runs `body`, recording a failure with the exception text if it throws.
template <typename F>
void run_check(Outcome& out, Check c, F&& body) {
  try {
    out.status[c] = static_cast<bool>(body());
  } catch (const std::exception& e) {
    out.status[c] = false;
    out.detail[c] = e.what();
  }
}

bool block_constant(const std::vector<std::int64_t>& z, const std::vector<std::size_t>& owner) {
  for (std::size_t i = 1; i < z.size(); ++i) {
    if (owner[i] == owner[i - 1] && z[i] != z[i - 1]) return false;
  }
  return true;
}

Outcome check_polygon(const LatticePolygon& polygon, bool inject_fault) {
  Outcome out;
  const AffineLattice2 z2;
  std::optional<BoundaryProfile> profile;
  try {
    profile = build_profile(polygon);
  } catch (const std::exception& e) {
    out.status[kRotationDuality] = false;
    out.detail[kRotationDuality] = e.what();
    return out;
  }
  const BoundaryProfile& prof = *profile;
  const LinearLattice2& m0_linear = prof.m0.linear();

  run_check(out, kPickZ2, [&] { return verify_pick(polygon, z2); });
  run_check(out, kPickM0, [&] { return verify_pick(polygon, prof.m0); });

  run_check(out, kWidthOracle, [&] {
    for (const LinearLattice2& lattice : {LinearLattice2(), m0_linear}) {
      const LatticeWidth fast = lattice_width(polygon, lattice);
      const LatticeWidth slow = lattice_width_brute_force(polygon, lattice);
      if (fast.width != slow.width || fast.direction != slow.direction) return false;
    }
    return true;
  });

  run_check(out, kEmptyInterior, [&] {
    for (const AffineLattice2& lattice : {z2, prof.m0}) {
      const bool empty = interior_points_in_lattice(polygon, lattice, 1).empty();
      const bool thin = lattice_width(polygon, lattice.linear()).width == 1;
      if (empty != (thin || is_twice_primitive_triangle(polygon, lattice))) return false;
    }
    return true;
  });

  run_check(out, kCountOracle, [&] {
    const std::int64_t count = count_components(polygon) + (inject_fault ? 1 : 0);
    const auto components = enumerate_components(prof);
    const auto contributing = std::ranges::count_if(components, [](const auto& c) { return c.contributes; });
    return count == count_components_oracle(polygon) && count == contributing &&
           components.size() == divisors(prof.idx).size();
  });

  run_check(out, kInvariantFactors, [&] {
    const auto factors = invariant_factors(prof.normals);
    const Integer idx(prof.idx);
    return factors.size() == 2 && factors[0] == Integer(1) && factors[1] == idx &&
           minor_gcd(prof.normals, 1) == Integer(1) && minor_gcd(prof.normals, 2) == idx &&
           rank(prof.normals) == 2 && has_zero_row_sums(prof.normals);
  });

  run_check(out, kRotationDuality, [&] { return rotate90(m0_linear) == prof.n0; });

  run_check(out, kWidthOneRank, [&] {
    return width_one_by_rank(prof).has_value() == (lattice_width(polygon, m0_linear).width == 1);
  });

  run_check(out, kPickMonotonicity, [&] {
    const std::int64_t base = count_interior_points_in_lattice(polygon, prof.m0);
    for (const auto& c : enumerate_components(prof)) {
      if (c.d > 1 && count_interior_points_in_lattice(polygon, c.m) <= base) return false;
    }
    return true;
  });

  run_check(out, kKernelDimension, [&] {
    return expected_kernel_dimension(prof.normals) == static_cast<std::int64_t>(prof.l()) - 2;
  });

  run_check(out, kSignature, [&] {
    const ComponentSignature sig = component_signature(prof);
    std::int64_t sum = 0;
    for (std::int64_t v : sig.z) sum += v;
    return sum == 0 && block_constant(sig.z, prof.owner) && is_hsnf(sig.certificate.A);
  });

  return out;
}

Outcome check_trial(std::uint64_t seed, std::size_t trial) {
  Outcome out;
  run_check(out, kUnimodularInvariance, [&] {
    std::seed_seq seq{seed, static_cast<std::uint64_t>(trial)};
    std::mt19937_64 rng(seq);
    const LatticePolygon polygon = random_polygon(rng, kTrialBound);
    const std::int64_t count = count_components(polygon);
    if (count != count_components_oracle(polygon)) return false;
    for (int k = 0; k < kMapsPerTrial; ++k) {
      const LatticePolygon image = transform(polygon, random_affine_unimodular(rng, polygon));
      if (count_components(image) != count) return false;
    }
    return true;
  });
  return out;
}

template <typename F>
std::vector<Outcome> parallel_map(std::size_t n, unsigned threads, F&& job) {
  std::vector<Outcome> results(n);
  const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
  std::vector<std::thread> pool;
  // strided assignment; each slot is written by exactly one worker
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < n; i += workers) results[i] = job(i);
    });
  }
  for (auto& t : pool) t.join();
  return results;
}

void merge(VerifyReport& report, const std::vector<Outcome>& outcomes, const std::vector<std::string>& labels) {
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    for (std::size_t c = 0; c < kCheckCount; ++c) {
      const auto& status = outcomes[i].status[c];
      if (!status) continue;
      CheckTally& tally = report.checks[c];
      if (*status) {
        ++tally.passed;
        continue;
      }
      ++tally.failed;
      if (tally.examples.size() < kExamplesKept) {
        std::string msg = labels[i];
        if (!outcomes[i].detail[c].empty()) msg += ": " + outcomes[i].detail[c];
        tally.examples.push_back(std::move(msg));
      }
    }
  }
}

}  // namespace

bool VerifyReport::ok() const {
  return std::ranges::all_of(checks, [](const CheckTally& t) { return t.failed == 0; });
}

VerifyReport verify(const VerifyOptions& options) {
  const std::vector<LatticePolygon> polygons = corpus(options.corpus);
  const unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());

  VerifyReport report;
  report.polygons = polygons.size();
  report.trials = options.trials;
  for (const char* name : kCheckNames) report.checks.push_back(CheckTally{name, 0, 0, {}});

  const auto corpus_outcomes =
      parallel_map(polygons.size(), threads, [&](std::size_t i) { return check_polygon(polygons[i], options.inject_fault); });
  std::vector<std::string> labels;
  labels.reserve(polygons.size());
  for (const auto& p : polygons) labels.push_back(describe(p));
  merge(report, corpus_outcomes, labels);

  const auto trial_outcomes =
      parallel_map(options.trials, threads, [&](std::size_t i) { return check_trial(options.seed, i); });
  labels.clear();
  for (std::size_t i = 0; i < options.trials; ++i) labels.push_back("trial " + std::to_string(i));
  merge(report, trial_outcomes, labels);
  return report;
}

}  // namespace severi
