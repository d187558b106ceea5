#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "hestonlab/error.hpp"
#include "hestonlab/path_io.hpp"
#include "hestonlab/random.hpp"
#include "hestonlab/simulate.hpp"
#include "test_support.hpp"

using namespace hestonlab;
using hestonlab::testing::reference_params;
using hestonlab::testing::with;

namespace {

constexpr Scheme kAllSchemes[] = {Scheme::AVE, Scheme::TE, Scheme::SE, Scheme::DESRE, Scheme::DISRE};

GaussianDraws zero_draws(std::size_t n) { return GaussianDraws{std::vector<double>(n, 0.0), std::vector<double>(n, 0.0), {}}; }

// Drift-only Euler recursion for Y.
std::vector<double> euler_ode(const ModelParams& p, const TimeGrid& g) {
    std::vector<double> y(g.steps() + 1);
    y[0] = p.y0();
    for (std::size_t k = 1; k <= g.steps(); ++k) y[k] = y[k - 1] + (p.a() - p.b() * y[k - 1]) * g.dt();
    return y;
}

ErrorCode csv_error(const std::string& text) {
    std::istringstream in(text);
    try {
        read_path_csv(in);
    } catch (const HestonError& e) {
        return e.code();
    }
    ADD_FAILURE() << "accepted: " << text;
    return ErrorCode::InvalidArgument;
}

}  // namespace

TEST(Random, StreamsAreDistinctAndReproducible) {
    const SeedLineage l{7, 3};
    EXPECT_NE(derive_stream_seed(l, StreamTag::Eta), derive_stream_seed(l, StreamTag::Zeta));
    EXPECT_NE(derive_stream_seed(l, StreamTag::Eta), derive_stream_seed(SeedLineage{7, 4}, StreamTag::Eta));
    EXPECT_NE(derive_stream_seed(l, StreamTag::Eta), derive_stream_seed(SeedLineage{8, 3}, StreamTag::Eta));
    const GaussianDraws d1 = make_draws(l, 100), d2 = make_draws(l, 100);
    EXPECT_EQ(d1.eta, d2.eta);
    EXPECT_EQ(d1.zeta, d2.zeta);
    EXPECT_NE(d1.eta, d1.zeta);
    EXPECT_EQ(d1.size(), 100u);
}

TEST(Random, PrefixStable) {
    const SeedLineage l{1, 0};
    const GaussianDraws small = make_draws(l, 10), large = make_draws(l, 1000);
    EXPECT_TRUE(std::equal(small.eta.begin(), small.eta.end(), large.eta.begin()));
    EXPECT_TRUE(std::equal(small.zeta.begin(), small.zeta.end(), large.zeta.begin()));
}

TEST(Random, SplitmixKnownValue) {
    // First output of the reference splitmix64 generator seeded with 0.
    EXPECT_EQ(splitmix64(0), 0xe220a8397b1dcdafULL);
}

TEST(Random, DrawsLookStandardNormal) {
    const GaussianDraws d = make_draws(SeedLineage{5, 0}, 1000000);
    for (const auto* v : {&d.eta, &d.zeta}) {
        const double n = static_cast<double>(v->size());
        const double mean = std::accumulate(v->begin(), v->end(), 0.0) / n;
        double var = 0.0;
        for (double e : *v) var += (e - mean) * (e - mean);
        var /= n - 1.0;
        EXPECT_NEAR(mean, 0.0, 0.005);
        EXPECT_NEAR(var, 1.0, 0.005);
    }
    double cross = 0.0;
    for (std::size_t k = 0; k < d.size(); ++k) cross += d.eta[k] * d.zeta[k];
    EXPECT_NEAR(cross / static_cast<double>(d.size()), 0.0, 0.005);
}

TEST(SimulateY, SingleNoiselessStep) {
    const ModelParams p = reference_params();
    const TimeGrid g = TimeGrid::create(0.1, 1);
    for (Scheme s : {Scheme::AVE, Scheme::TE, Scheme::SE}) {
        const auto y = simulate_y(p, g, s, zero_draws(1));
        ASSERT_EQ(y.size(), 2u);
        EXPECT_EQ(y[0], 0.2);
        EXPECT_NEAR(y[1], 0.234, 1e-15);
    }
}

TEST(SimulateY, ThreeStepsByHand) {
    const ModelParams p = reference_params();
    const TimeGrid g = TimeGrid::create(0.3, 3);
    GaussianDraws d{{0.5, -1.0, 2.0}, {0.0, 0.0, 0.0}, {}};
    const auto y = simulate_y(p, g, Scheme::TE, d);
    double v = 0.2;
    const double dt = 0.3 / 3.0;
    for (int k = 0; k < 3; ++k) {
        v = v + (0.4 - 0.3 * v) * dt + 0.4 * std::sqrt(v) * std::sqrt(dt) * d.eta[k];
        EXPECT_DOUBLE_EQ(y[k + 1], v);
    }
    const auto z = simulate_y(p, g, Scheme::DISRE, d);
    double zz = std::sqrt(0.2);
    for (int k = 0; k < 3; ++k) {
        zz = step_disre(p, zz, dt, d.eta[k]);
        EXPECT_DOUBLE_EQ(z[k + 1], zz * zz);
    }
}

TEST(SimulateY, LengthMismatch) {
    const ModelParams p = reference_params();
    const TimeGrid g = TimeGrid::create(1.0, 10);
    try {
        simulate_y(p, g, Scheme::DISRE, zero_draws(9));
        FAIL();
    } catch (const HestonError& e) {
        EXPECT_EQ(e.code(), ErrorCode::LengthMismatch);
    }
}

TEST(SimulateY, FellerCheckedUpFront) {
    ParamSet raw = reference_param_set();
    raw.sigma1 = 1.0;
    const ModelParams p = validate_params(raw);
    const TimeGrid g = TimeGrid::create(1.0, 10);
    try {
        simulate_y(p, g, Scheme::DISRE, zero_draws(10));
        FAIL();
    } catch (const HestonError& e) {
        EXPECT_EQ(e.code(), ErrorCode::FellerViolated);
    }
    EXPECT_NO_THROW(simulate_y(p, g, Scheme::SE, zero_draws(10)));
}

TEST(NoiselessReduction, EulerVariantsMatchOdeExactly) {
    const ModelParams p = reference_params();
    const TimeGrid g = TimeGrid::create(10.0, 100);
    const auto ode = euler_ode(p, g);
    for (Scheme s : {Scheme::AVE, Scheme::TE, Scheme::SE}) EXPECT_EQ(simulate_y(p, g, s, zero_draws(100)), ode);
}

TEST(NoiselessReduction, DesreMatchesDriftOnlyZRecursion) {
    const ModelParams p = reference_params();
    const TimeGrid g = TimeGrid::create(10.0, 100);
    const auto y = simulate_y(p, g, Scheme::DESRE, zero_draws(100));
    double z = std::sqrt(p.y0());
    const double c = 0.5 * p.a() - 0.125 * p.sigma1() * p.sigma1();
    for (std::size_t k = 1; k <= 100; ++k) {
        z = z + (c / z - 0.5 * p.b() * z) * g.dt();
        EXPECT_EQ(y[k], z * z);
    }
}

TEST(NoiselessReduction, DisreSatisfiesImplicitDriftRecursion) {
    const ModelParams p = reference_params();
    const TimeGrid g = TimeGrid::create(10.0, 100);
    const auto y = simulate_y(p, g, Scheme::DISRE, zero_draws(100));
    const double c = 0.5 * p.a() - 0.125 * p.sigma1() * p.sigma1();
    for (std::size_t k = 1; k <= 100; ++k) {
        const double zp = std::sqrt(y[k - 1]), zn = std::sqrt(y[k]);
        EXPECT_LE(std::abs(zn - zp - (c / zn - 0.5 * p.b() * zn) * g.dt()), 1e-9);
    }
}

TEST(NoiselessReduction, FineGridAllSchemesNearOde) {
    const ModelParams p = with(reference_param_set(), &ParamSet::sigma1, 1e-12);
    const TimeGrid g = TimeGrid::create(1.0, 1000000);
    const auto ode = euler_ode(p, g);
    const GaussianDraws d = make_draws(SeedLineage{3, 0}, g.steps());
    for (Scheme s : kAllSchemes) {
        const auto y = simulate_y(p, g, s, d);
        double worst = 0.0;
        for (std::size_t k = 0; k <= g.steps(); ++k) worst = std::max(worst, std::abs(y[k] - ode[k]));
        EXPECT_LE(worst, 1e-6) << to_string(s);
    }
}

TEST(SimulateY, PositivityOfReflectingAndImplicitSchemes) {
    // Volatile setting close to the Feller boundary.
    ParamSet raw = reference_param_set();
    raw.a = 0.1;
    raw.sigma1 = 0.44;
    raw.y0 = 0.01;
    const ModelParams p = validate_params(raw);
    const TimeGrid g = TimeGrid::create(10.0, 200);
    for (std::uint64_t r = 0; r < 1000; ++r) {
        const GaussianDraws d = make_draws(SeedLineage{17, r}, g.steps());
        for (Scheme s : {Scheme::SE, Scheme::DISRE}) {
            const auto y = simulate_y(p, g, s, d);
            ASSERT_TRUE(std::all_of(y.begin(), y.end(), [&](double v) { return s == Scheme::SE ? v >= 0.0 : v > 0.0; }))
                << to_string(s) << " replicate " << r;
        }
    }
}

TEST(SimulateY, AbsoluteValueEulerCanGoNegative) {
    ParamSet raw = reference_param_set();
    raw.sigma1 = 1.5;
    raw.y0 = 0.01;
    const ModelParams p = validate_params(raw);
    const TimeGrid g = TimeGrid::create(10.0, 100);
    bool seen_negative = false;
    for (std::uint64_t r = 0; r < 1000 && !seen_negative; ++r) {
        const auto y = simulate_y(p, g, Scheme::AVE, make_draws(SeedLineage{1, r}, g.steps()));
        seen_negative = std::any_of(y.begin(), y.end(), [](double v) { return v < 0.0; });
    }
    EXPECT_TRUE(seen_negative);
}

TEST(SimulateXY, DeterministicPerLineage) {
    const ModelParams p = reference_params();
    const TimeGrid g = TimeGrid::create(5.0, 500);
    for (Scheme s : kAllSchemes) {
        const XYPath a = simulate_xy(p, g, s, SeedLineage{42, 1});
        const XYPath b = simulate_xy(p, g, s, SeedLineage{42, 1});
        const XYPath c = simulate_xy(p, g, s, SeedLineage{42, 2});
        EXPECT_EQ(a.y, b.y);
        EXPECT_EQ(a.x, b.x);
        EXPECT_NE(a.y, c.y);
        EXPECT_EQ(a.scheme, s);
        EXPECT_EQ(a.y.size(), 501u);
        EXPECT_EQ(a.x.size(), 501u);
        EXPECT_EQ(a.x[0], p.x0());
    }
}

TEST(SimulateX, NoiselessDriftWithoutLeverage) {
    ParamSet raw = reference_param_set();
    raw.beta = 0.0;
    raw.sigma2 = 1e-12;
    const ModelParams p = validate_params(raw);
    const TimeGrid g = TimeGrid::create(10.0, 1000);
    const XYPath path = simulate_xy(p, g, Scheme::DISRE, SeedLineage{9, 0});
    for (std::size_t k = 0; k <= g.steps(); ++k) EXPECT_NEAR(path.x[k], p.x0() + p.alpha() * g.time(k), 1e-9);
}

TEST(SimulateX, NoiseCorrelationMatchesRho) {
    ParamSet raw = reference_param_set();
    raw.alpha = 0.0;
    raw.beta = 0.0;
    raw.sigma2 = 1.0;
    raw.rho = -0.6;
    const ModelParams p = validate_params(raw);
    const std::size_t n = 1000000;
    const TimeGrid g = TimeGrid::create(static_cast<double>(n), n);
    const GaussianDraws d = make_draws(SeedLineage{77, 0}, n);
    const std::vector<double> ones(n + 1, 1.0);
    const auto x = simulate_x(p, g, ones, d);
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double dx = x[k + 1] - x[k];
        sxy += dx * d.eta[k];
        sxx += dx * dx;
        syy += d.eta[k] * d.eta[k];
    }
    EXPECT_NEAR(sxy / std::sqrt(sxx * syy), -0.6, 0.01);
}

TEST(SimulateX, NegativeYUsesZeroDiffusion) {
    const ModelParams p = reference_params();
    const TimeGrid g = TimeGrid::create(0.1, 1);
    GaussianDraws d{{1.0}, {1.0}, {}};
    const std::vector<double> y{-0.5, 0.0};
    const auto x = simulate_x(p, g, y, d);
    EXPECT_NEAR(x[1], 0.1 + (0.1 + 0.15 * 0.5) * 0.1, 1e-15);
}

TEST(PathCsv, RoundTripIsExact) {
    const XYPath path = simulate_xy(reference_params(), TimeGrid::create(3.0, 300), Scheme::DISRE, SeedLineage{1, 1});
    std::stringstream buf;
    write_path_csv(buf, path);
    const XYPath back = read_path_csv(buf);
    EXPECT_EQ(back.grid, path.grid);
    EXPECT_EQ(back.y, path.y);
    EXPECT_EQ(back.x, path.x);
    EXPECT_FALSE(back.scheme.has_value());
}

TEST(PathCsv, RejectsMalformedInput) {
    EXPECT_EQ(csv_error(""), ErrorCode::CsvFormatError);
    EXPECT_EQ(csv_error("time,y,x\n0,1,1\n1,1,1\n"), ErrorCode::CsvFormatError);
    EXPECT_EQ(csv_error("t,y,x\n0,1,1\n"), ErrorCode::CsvFormatError);
    EXPECT_EQ(csv_error("t,y,x\n0,1\n1,1,1\n"), ErrorCode::CsvFormatError);
    EXPECT_EQ(csv_error("t,y,x\n0,1,1\n1,abc,1\n"), ErrorCode::CsvFormatError);
    EXPECT_EQ(csv_error("t,y,x\n0.5,1,1\n1,1,1\n"), ErrorCode::CsvFormatError);
    EXPECT_EQ(csv_error("t,y,x\n0,1,1\n1,1,1\n3,1,1\n"), ErrorCode::CsvFormatError);
    EXPECT_EQ(csv_error("t,y,x\n0,1,1\n-1,1,1\n"), ErrorCode::CsvFormatError);
}

TEST(PathCsv, AcceptsCrlfAndBlankLines) {
    std::istringstream in("t,y,x\r\n0,1,0\r\n\n1,2,0.5\r\n2,2,0.5\r\n");
    const XYPath p = read_path_csv(in);
    EXPECT_EQ(p.grid.steps(), 2u);
    EXPECT_EQ(p.y, (std::vector<double>{1, 2, 2}));
}
