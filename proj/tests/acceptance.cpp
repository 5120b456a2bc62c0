// End-to-end acceptance suite. Each criterion prints one PASS/FAIL line;
// the process exits with the number of failed criteria.
//
// Golden values in this file were produced by one-time reference runs of
// the default backend (zlib, level 9) and are frozen; the commands that
// regenerate them are noted next to each constant. If the backend ever
// changes behavior, criterion 8 fails loudly rather than drifting.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "kdecomp/codec.hpp"
#include "kdecomp/decomposition.hpp"
#include "kdecomp/estimator.hpp"
#include "kdecomp/generate.hpp"
#include "kdecomp/lightcone.hpp"
#include "kdecomp/projection.hpp"

namespace fs = std::filesystem;
using namespace kdecomp;

namespace {

// --- reference manifest: lightcone --m 40000 --seed 3 (backend zlib:9) ---
// regenerate: kdecomp lightcone --m 40000 --seed 3 --regions full,inside,outside
constexpr std::uint64_t kGoldenInsideK = 86912;
constexpr std::uint64_t kGoldenOutsideK = 571386;
constexpr std::uint64_t kGoldenFullK = 658371;
// geometric mean of the inside and full golden values
constexpr std::uint64_t kGoldenThreshold = 239208;

struct Check {
    std::vector<std::string> failures;

    void require(bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    }
};

int g_failed = 0;

void criterion(int number, const std::string& title,
               const std::function<void(Check&)>& body) {
    Check check;
    auto start = std::chrono::steady_clock::now();
    try {
        body(check);
    } catch (const std::exception& e) {
        check.failures.push_back(std::string("exception: ") + e.what());
    }
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (check.failures.empty()) {
        std::printf("[PASS] criterion %2d: %s (%.1fs)\n", number, title.c_str(), elapsed);
    } else {
        ++g_failed;
        std::printf("[FAIL] criterion %2d: %s (%.1fs)\n", number, title.c_str(), elapsed);
        for (const auto& f : check.failures) {
            std::printf("         - %s\n", f.c_str());
        }
    }
    std::fflush(stdout);
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

// state shared between criteria
std::map<std::uint64_t, DecompositionReport> g_hypercube_reports;  // criterion 2 -> 3
struct RegionStudy {
    LightconeReport full, inside, outside;
};
std::map<std::uint64_t, RegionStudy> g_cloud_studies;  // criterion 5 -> 6, 8

double spread(const LightconeReport& report) {
    std::uint64_t lo = UINT64_MAX, hi = 0;
    for (const char* name : {"xyz", "xyt", "xzt", "yzt"}) {
        std::uint64_t k = report.subset(name).k_hat;
        lo = std::min(lo, k);
        hi = std::max(hi, k);
    }
    return static_cast<double>(hi - lo) / static_cast<double>(lo);
}

struct CliRun {
    int exit_code;
    std::string out;
};

CliRun run_cli(const std::string& args) {
    std::string command = std::string(KDECOMP_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) return {-1, {}};
    CliRun r{-1, {}};
    char buffer[8192];
    std::size_t got;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) r.out.append(buffer, got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void criterion_1_staircase(Check& check) {
    auto start = std::chrono::steady_clock::now();
    auto c = estimate(constant_bits(1u << 20));
    auto a = estimate(alternating_bits(1u << 20));
    auto r = estimate(random_bits(1u << 20, 7));
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    check.require(c.k_hat < a.k_hat, "constant < alternating: " + std::to_string(c.k_hat) +
                                         " vs " + std::to_string(a.k_hat));
    check.require(a.k_hat < r.k_hat, "alternating < random: " + std::to_string(a.k_hat) +
                                         " vs " + std::to_string(r.k_hat));
    double ratio = static_cast<double>(r.k_hat) / static_cast<double>(a.k_hat);
    check.require(ratio >= 10.0, "random/alternating ratio " + fmt(ratio) + " >= 10");
    check.require(elapsed <= 5.0, "runtime " + fmt(elapsed) + "s <= 5s");
}

void criterion_2_decomposition_random(Check& check) {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        auto start = std::chrono::steady_clock::now();
        auto d = random_hypercube(100, 3000, seed);
        auto report = verify_decomposition(d, {});
        double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::string tag = "seed " + std::to_string(seed) + ": ";
        check.require(report.ratio >= 95.0 && report.ratio <= 110.0,
                      tag + "ratio " + fmt(report.ratio) + " in [95, 110]");
        check.require(report.lower_ok, tag + "lower bound holds with default slack");
        check.require(elapsed <= 120.0, tag + "runtime " + fmt(elapsed) + "s <= 120s");
        g_hypercube_reports.emplace(seed, std::move(report));
    }
}

void criterion_3_decomposition_curve(Check& check) {
    auto curve = parametric_curve(100);
    auto report = verify_decomposition(curve, {});
    check.require(report.ratio >= 95.0 && report.ratio <= 110.0,
                  "curve ratio " + fmt(report.ratio) + " in [95, 110]");

    const auto& random_case = g_hypercube_reports.at(1);
    check.require(report.k_full.k_hat * 5 <= random_case.k_full.k_hat,
                  "curve K " + std::to_string(report.k_full.k_hat) +
                      " at least 5x below the random case " +
                      std::to_string(random_case.k_full.k_hat));
}

void criterion_4_small_n_bases(Check& check) {
    int violations = 0;
    std::vector<std::string> details;
    std::mt19937_64 rng(404);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t m = 50 + rng() % 200;

        // two-column base: K(d) <= K(pi_1 d) + K(pi_2 d) + s
        auto d2 = random_hypercube(2, m, rng());
        auto k2 = estimate(d2);
        std::uint64_t parts2 = 0;
        for (const auto& spec : canonical_family(2)) {
            parts2 += estimate(project(d2, spec)).k_hat;
        }
        if (k2.k_hat > parts2 + log_slack(k2.raw_len)) {
            ++violations;
            details.push_back("n=2 trial " + std::to_string(trial) + " m=" + std::to_string(m));
        }

        // three-column base: 2 K(d) <= sum of the three pair projections + s
        auto d3 = random_hypercube(3, m, rng());
        auto k3 = estimate(d3);
        std::uint64_t parts3 = 0;
        for (const auto& spec : canonical_family(3)) {
            parts3 += estimate(project(d3, spec)).k_hat;
        }
        if (2 * k3.k_hat > parts3 + log_slack(k3.raw_len)) {
            ++violations;
            details.push_back("n=3 trial " + std::to_string(trial) + " m=" + std::to_string(m));
        }
    }
    for (const auto& d : details) {
        std::printf("         backend anomaly: %s\n", d.c_str());
    }
    check.require(violations <= 2,
                  "violations " + std::to_string(violations) + " <= 2 across the corpus");
}

void criterion_5_lightcone_ordering(Check& check) {
    auto start = std::chrono::steady_clock::now();
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        auto cloud = generate_cloud(40000, seed);
        QuantizedScalar eps;
        RegionStudy s{study(cloud, {RegionTag::full, eps}),
                      study(cloud, {RegionTag::inside, eps}),
                      study(cloud, {RegionTag::outside, eps})};
        std::string tag = "seed " + std::to_string(seed) + ": ";

        std::uint64_t ki = s.inside.subset("xyzt").k_hat;
        std::uint64_t ko = s.outside.subset("xyzt").k_hat;
        std::uint64_t kf = s.full.subset("xyzt").k_hat;
        check.require(ki < ko && ko < kf, tag + "K ordering inside < outside < full");

        double di = s.inside.subset("xyzt").density();
        double do_ = s.outside.subset("xyzt").density();
        check.require(di < do_, tag + "density inside " + fmt(di) + " < outside " + fmt(do_));

        double inside_ratio = static_cast<double>(ki) / static_cast<double>(kf);
        double outside_ratio = static_cast<double>(ko) / static_cast<double>(kf);
        check.require(inside_ratio <= 0.35, tag + "inside/full " + fmt(inside_ratio) + " <= 0.35");
        check.require(outside_ratio >= 0.6 && outside_ratio < 1.0,
                      tag + "outside/full " + fmt(outside_ratio) + " in [0.6, 1.0)");

        g_cloud_studies.emplace(seed, std::move(s));
    }
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    check.require(elapsed <= 60.0, "runtime " + fmt(elapsed) + "s <= 60s");
}

void criterion_6_projection_spreads(Check& check) {
    for (const auto& [seed, s] : g_cloud_studies) {
        std::string tag = "seed " + std::to_string(seed) + ": ";
        double full_spread = spread(s.full);
        double inside_spread = spread(s.inside);
        check.require(full_spread <= 0.02,
                      tag + "full-region 3-coordinate spread " + fmt(full_spread) + " <= 2%");
        check.require(inside_spread > full_spread, tag + "inside spread " + fmt(inside_spread) +
                                                       " > full spread " + fmt(full_spread));
    }
}

void criterion_7_geometry_oracle(Check& check) {
    auto cloud = generate_cloud(1'000'000, 42);
    QuantizedScalar eps;
    std::size_t inside = 0;
    for (std::size_t i = 0; i < cloud.m(); ++i) {
        if (classify(cloud.points.row(i), eps) == RegionTag::inside) ++inside;
    }
    double fraction = static_cast<double>(inside) / static_cast<double>(cloud.m());
    double expected = std::numbers::pi / 24.0;
    check.require(std::abs(fraction - expected) <= 0.005,
                  "inside fraction " + fmt(fraction) + " within 0.005 of pi/24 = " +
                      fmt(expected));
}

void criterion_8_filters(Check& check) {
    const auto& s = g_cloud_studies.at(3);
    check.require(s.inside.subset("xyzt").k_hat == kGoldenInsideK,
                  "golden inside K intact: got " +
                      std::to_string(s.inside.subset("xyzt").k_hat) + ", frozen " +
                      std::to_string(kGoldenInsideK));
    check.require(s.outside.subset("xyzt").k_hat == kGoldenOutsideK,
                  "golden outside K intact: got " +
                      std::to_string(s.outside.subset("xyzt").k_hat) + ", frozen " +
                      std::to_string(kGoldenOutsideK));
    check.require(s.full.subset("xyzt").k_hat == kGoldenFullK,
                  "golden full K intact: got " + std::to_string(s.full.subset("xyzt").k_hat) +
                      ", frozen " + std::to_string(kGoldenFullK));

    auto cloud = generate_cloud(40000, 3);
    QuantizedScalar eps;
    auto low = lowpass_filter(cloud, eps, kGoldenThreshold);
    auto high = highpass_filter(cloud, eps, kGoldenThreshold);
    check.require(low.passed == std::vector<RegionTag>{RegionTag::inside},
                  "low-pass passes exactly {inside}");
    check.require(high.passed == std::vector<RegionTag>{RegionTag::full, RegionTag::outside},
                  "high-pass passes exactly {full, outside}");
}

void criterion_9_determinism(Check& check) {
    fs::path base = fs::temp_directory_path() / "kdecomp_acceptance";
    fs::remove_all(base);
    fs::create_directories(base);

    auto a = run_cli("decompose --generate hypercube:n=10,m=500 --seed 11");
    auto b = run_cli("decompose --generate hypercube:n=10,m=500 --seed 11");
    check.require(a.exit_code == 0 && b.exit_code == 0, "decompose reference manifest runs");
    check.require(!a.out.empty() && a.out == b.out, "decompose rerun is byte-identical");

    fs::path plots = base / "plots";
    std::string args =
        "lightcone --m 6000 --seed 3 --regions full,inside,outside --plot " + plots.string();
    auto c = run_cli(args);
    check.require(c.exit_code == 0, "lightcone reference manifest runs");

    std::map<std::string, std::string> first_svgs;
    for (const auto& entry : fs::directory_iterator(plots)) {
        first_svgs[entry.path().filename().string()] = slurp(entry.path());
    }
    check.require(first_svgs.size() == 18, "3 regions x 6 coordinate pairs of plots, got " +
                                               std::to_string(first_svgs.size()));

    auto d = run_cli(args);
    check.require(d.exit_code == 0, "lightcone reference manifest reruns");
    check.require(!c.out.empty() && c.out == d.out, "lightcone rerun is byte-identical");
    for (const auto& [name, bytes] : first_svgs) {
        check.require(slurp(plots / name) == bytes, "svg " + name + " is byte-identical");
    }
}

void criterion_10_codec_properties(Check& check) {
    auto backend = default_backend();
    std::mt19937_64 rng(1000);
    int bad_roundtrip = 0, bad_bound = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        std::size_t n = 1 + rng() % 8;
        std::size_t m = rng() % 50;
        auto d = random_dataset_full_range(n, m, rng());
        auto blob = encode(d);
        if (decode(blob, n) != d) ++bad_roundtrip;
        auto est = estimate_blob(blob, backend);
        if (est.k_hat > expansion_bound(est.raw_len, backend)) ++bad_bound;
    }
    check.require(bad_roundtrip == 0,
                  std::to_string(bad_roundtrip) + " round-trip failures out of 1000");
    check.require(bad_bound == 0,
                  std::to_string(bad_bound) + " expansion-bound violations out of 1000");
}

}  // namespace

int main() {
    std::printf("acceptance suite (backend zlib:9)\n");

    criterion(1, "compression staircase on 2^20-bit inputs", criterion_1_staircase);
    criterion(2, "decomposition ratio on random hypercubes (n=100, m=3000, 10 seeds)",
              criterion_2_decomposition_random);
    criterion(3, "decomposition ratio on the parametric curve", criterion_3_decomposition_curve);
    criterion(4, "small-n subadditivity bases over a 50-case corpus", criterion_4_small_n_bases);
    criterion(5, "light-cone complexity ordering (m=40000, 10 seeds)",
              criterion_5_lightcone_ordering);
    criterion(6, "projection spreads: full tight, inside wider", criterion_6_projection_spreads);
    criterion(7, "inside fraction matches the double-cone volume", criterion_7_geometry_oracle);
    criterion(8, "complexity filters split the regions at the frozen threshold",
              criterion_8_filters);
    criterion(9, "reference manifests reproduce byte-identical outputs",
              criterion_9_determinism);
    criterion(10, "codec round-trip and expansion bound on 1000 datasets",
              criterion_10_codec_properties);

    if (g_failed == 0) {
        std::printf("all criteria passed\n");
    } else {
        std::printf("%d criterion(s) failed\n", g_failed);
    }
    return g_failed;
}
