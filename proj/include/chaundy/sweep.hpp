#pragma once

#include <atomic>
#include <cctype>
#include <cstdint>
#include <exception>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "chaundy/bezout.hpp"
#include "chaundy/check_report.hpp"
#include "chaundy/errors.hpp"
#include "chaundy/identities.hpp"
#include "chaundy/special_fn.hpp"

namespace chaundy {

/// Inclusive integer interval, the CLI's "lo..hi".
struct IntRange {
    Index lo = 0;
    Index hi = 0;
};

inline IntRange parse_range(const std::string& text) {
    auto dots = text.find("..");
    auto parse_index = [&](const std::string& s) -> Index {
        if (s.empty()) throw config_error("empty bound in range '" + text + "'");
        for (char c : s)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw config_error("range bounds must be nonnegative integers: '" + text + "'");
        unsigned long v = std::stoul(s);
        return static_cast<Index>(v);
    };
    IntRange r;
    if (dots == std::string::npos) {
        r.lo = r.hi = parse_index(text);
    } else {
        r.lo = parse_index(text.substr(0, dots));
        r.hi = parse_index(text.substr(dots + 2));
    }
    if (r.lo > r.hi) throw config_error("inverted range '" + text + "'");
    return r;
}

enum class IdentityKind {
    ChaundyBullard,
    Symmetry,
    Cancellation,
    Brill,
    Lemma42,
    WTelescoping,
    Remark62,
    Remark63,
    Twin,
    GammaRatio,
    Beta,
    BezoutCross,
};

inline IdentityKind identity_from_name(const std::string& name) {
    if (name == "chaundy-bullard") return IdentityKind::ChaundyBullard;
    if (name == "symmetry") return IdentityKind::Symmetry;
    if (name == "cancellation") return IdentityKind::Cancellation;
    if (name == "brill") return IdentityKind::Brill;
    if (name == "lemma42") return IdentityKind::Lemma42;
    if (name == "w-telescoping") return IdentityKind::WTelescoping;
    if (name == "remark62") return IdentityKind::Remark62;
    if (name == "remark63") return IdentityKind::Remark63;
    if (name == "twin") return IdentityKind::Twin;
    if (name == "gamma-ratio") return IdentityKind::GammaRatio;
    if (name == "beta") return IdentityKind::Beta;
    if (name == "bezout-cross-check") return IdentityKind::BezoutCross;
    throw config_error("unknown identity '" + name + "'");
}

inline std::vector<std::string> identity_names() {
    return {"chaundy-bullard", "symmetry",  "cancellation", "brill",
            "lemma42",         "w-telescoping", "remark62", "remark63",
            "twin",            "gamma-ratio",   "beta",     "bezout-cross-check"};
}

struct SweepConfig {
    IdentityKind identity = IdentityKind::ChaundyBullard;
    IntRange n_range;
    IntRange m_range;
    IntRange k_range;
    bool has_k = false;
    std::optional<Rational> alpha;
    std::optional<Rational> beta;
    std::optional<Rational> a;
    unsigned jobs = 1;
    std::uint64_t seed = 12345;
    bool corrupt_first = false; // test hook: fault-inject grid point 0
    std::size_t brill_samples = 200;
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Generator for grid point `ordinal`, independent of worker scheduling.
inline std::mt19937_64 point_rng(std::uint64_t seed, std::uint64_t ordinal) {
    return std::mt19937_64(splitmix64(seed ^ splitmix64(ordinal + 1)));
}

inline Rational random_rational(std::mt19937_64& rng, long max_abs_num, long max_den,
                                bool positive) {
    std::uniform_int_distribution<long> num_dist(positive ? 1 : -max_abs_num, max_abs_num);
    std::uniform_int_distribution<long> den_dist(1, max_den);
    return Rational(Int(num_dist(rng)), Int(den_dist(rng)));
}

struct GridPoint {
    Index n = 0, m = 0, k = 0;
    std::size_t sample = 0;
};

} // namespace detail

/// Runs one verification over the configured grid. Reports come back in grid
/// order (lexicographic in (n, m, k) / sample) regardless of the worker
/// count, and all sampled parameters derive from (seed, grid ordinal), so
/// parallel and serial sweeps emit identical report sequences.
inline std::vector<CheckReport> run_sweep(const SweepConfig& cfg) {
    using detail::GridPoint;
    std::vector<GridPoint> grid;

    auto for_nm = [&] {
        for (Index n = cfg.n_range.lo; n <= cfg.n_range.hi; ++n)
            for (Index m = cfg.m_range.lo; m <= cfg.m_range.hi; ++m)
                grid.push_back({n, m, 0, 0});
    };

    switch (cfg.identity) {
        case IdentityKind::ChaundyBullard:
        case IdentityKind::Symmetry:
        case IdentityKind::Cancellation:
        case IdentityKind::Remark62:
        case IdentityKind::Twin:
        case IdentityKind::GammaRatio:
        case IdentityKind::Beta:
        case IdentityKind::BezoutCross:
            for_nm();
            break;
        case IdentityKind::Lemma42:
        case IdentityKind::WTelescoping:
            for (Index n = cfg.n_range.lo; n <= cfg.n_range.hi; ++n)
                for (Index m = cfg.m_range.lo; m <= cfg.m_range.hi; ++m)
                    for (Index k = cfg.k_range.lo; k <= cfg.k_range.hi; ++k)
                        if (k <= n) grid.push_back({n, m, k, 0});
            break;
        case IdentityKind::Remark63:
            for (Index n = cfg.n_range.lo; n <= cfg.n_range.hi; ++n)
                for (Index m = cfg.m_range.lo; m <= cfg.m_range.hi; ++m)
                    for (Index k = cfg.k_range.lo; k <= cfg.k_range.hi; ++k)
                        if (k <= m) grid.push_back({n, m, k, 0});
            break;
        case IdentityKind::Brill: {
            // p sweeps the --n range; x is --alpha when given, else seeded
            // random rationals with |num|, den <= 1000.
            const std::size_t samples = cfg.alpha ? 1 : cfg.brill_samples;
            for (Index p = cfg.n_range.lo; p <= cfg.n_range.hi; ++p)
                for (std::size_t s = 0; s < samples; ++s) grid.push_back({p, 0, 0, s});
            break;
        }
    }
    if (grid.empty())
        throw config_error("the requested grid is empty (check ranges and k preconditions)");

    auto evaluate = [&](std::size_t ordinal) -> CheckReport {
        const GridPoint& g = grid[ordinal];
        const FaultInjection fault{};
        const FaultInjection* inject =
            (cfg.corrupt_first && ordinal == 0) ? &fault : nullptr;

        switch (cfg.identity) {
            case IdentityKind::ChaundyBullard: return verify_chaundy_bullard(g.n, g.m, inject);
            case IdentityKind::Symmetry: return verify_symmetry(g.n, g.m, inject);
            case IdentityKind::Cancellation: return verify_cancellation(g.n, g.m, inject);
            case IdentityKind::Remark62: return verify_remark62(g.n, g.m, inject);
            case IdentityKind::Twin: return verify_twin(g.n, g.m, inject);
            case IdentityKind::BezoutCross: return bezout_cross_check(g.n, g.m, inject);
            case IdentityKind::Lemma42: return verify_lemma42(g.k, g.n, g.m, inject);
            case IdentityKind::WTelescoping: return w_telescoping_check(g.k, g.n, g.m, inject);
            case IdentityKind::Remark63: return verify_remark63(g.k, g.m, g.n, inject);
            case IdentityKind::Brill: {
                Rational x;
                if (cfg.alpha) {
                    x = *cfg.alpha;
                } else {
                    auto rng = detail::point_rng(cfg.seed, g.sample);
                    x = detail::random_rational(rng, 1000, 1000, false);
                }
                return verify_brill(g.n, x, inject);
            }
            case IdentityKind::GammaRatio: {
                Rational alpha, beta;
                if (cfg.alpha && cfg.beta) {
                    alpha = *cfg.alpha;
                    beta = *cfg.beta;
                } else {
                    auto rng = detail::point_rng(cfg.seed, ordinal);
                    alpha = detail::random_rational(rng, 1000, 1000, true);
                    beta = detail::random_rational(rng, 1000, 1000, true);
                }
                return verify_gamma_ratio_form(g.n, g.m, alpha, beta, inject);
            }
            case IdentityKind::Beta: {
                Rational alpha, beta;
                std::optional<Rational> a = cfg.a;
                if (cfg.alpha && cfg.beta) {
                    alpha = *cfg.alpha;
                    beta = *cfg.beta;
                    if (!a && !(is_integer(alpha) && is_integer(beta))) {
                        auto rng = detail::point_rng(cfg.seed, ordinal);
                        a = Rational(Int(rng() % 1001), Int(1000));
                    }
                } else {
                    auto rng = detail::point_rng(cfg.seed, ordinal);
                    alpha = Rational(Int(1 + rng() % 3000), Int(1000));
                    beta = Rational(Int(1 + rng() % 3000), Int(1000));
                    if (!a) a = Rational(Int(rng() % 1001), Int(1000));
                }
                return verify_beta_identity(g.n, g.m, alpha, beta, a, inject);
            }
        }
        throw std::logic_error("unhandled identity kind");
    };

    std::vector<CheckReport> reports(grid.size());
    const unsigned jobs = std::max(1u, cfg.jobs);
    if (jobs == 1) {
        for (std::size_t i = 0; i < grid.size(); ++i) reports[i] = evaluate(i);
        return reports;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto worker = [&] {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= grid.size()) return;
            try {
                reports[i] = evaluate(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                next.store(grid.size());
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
    return reports;
}

} // namespace chaundy
