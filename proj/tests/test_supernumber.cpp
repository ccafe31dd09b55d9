#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "superchsh/checks.hpp"
#include "superchsh/supernumber.hpp"
#include "test_util.hpp"

using namespace superchsh;

namespace {
const Supernumber tA = theta(Party::A);
const Supernumber tAh = theta_hash(Party::A);
const Supernumber tB = theta(Party::B);
const Supernumber tBh = theta_hash(Party::B);
}  // namespace

TEST_CASE("generator bookkeeping") {
    CHECK(kGenerators[0].party() == Party::A);
    CHECK(kGenerators[1].party() == Party::A);
    CHECK(kGenerators[2].party() == Party::B);
    CHECK(kGenerators[3].party() == Party::B);
    CHECK(!kGenerators[0].hashed());
    CHECK(kGenerators[1].hashed());
    CHECK(generator_index(Party::B, true) == 3);
}

TEST_CASE("product: nilpotency and anticommutation") {
    CHECK((tA * tA).is_zero());
    CHECK(max_coeff_dist(tB * tA, -(tA * tB)) == 0.0);
}

TEST_CASE("product: disjoint even factors expand by hand") {
    const Supernumber lhs = (Supernumber(1.0) + tA * tAh) * (Supernumber(1.0) + tB * tBh);
    Supernumber want = Supernumber(1.0) + tA * tAh + tB * tBh + tA * tAh * tB * tBh;
    CHECK(max_coeff_dist(lhs, want) == 0.0);
}

TEST_CASE("involution on generators and pairs") {
    CHECK(max_coeff_dist(tA.involution(), tAh) == 0.0);
    CHECK(max_coeff_dist(tA.involution().involution(), -tA) == 0.0);
    CHECK(max_coeff_dist((tA * tAh).involution(), tA * tAh) == 0.0);
    // antilinearity
    const Supernumber z = Complex(0.0, 2.0) * tA;
    CHECK(max_coeff_dist(z.involution(), Complex(0.0, -2.0) * tAh) == 0.0);
}

TEST_CASE("body") {
    const double r = 0.4;
    const Complex alpha(0.6, 0.3);
    const Supernumber p0 =
        std::norm(alpha) * (Supernumber(1.0) - (r * r) * (tA * tAh));
    CHECK(p0.body() == Complex(std::norm(alpha), 0.0));
    CHECK(Supernumber(1.0).body() == Complex(1.0, 0.0));
    CHECK((tA * tAh).body() == Complex(0.0, 0.0));
}

TEST_CASE("rogers closed form on the defining examples") {
    const double r = 0.8;
    const Supernumber x = Supernumber(1.0) - (r * r) * (tA * tAh);
    CHECK(x.rogers().real() == doctest::Approx(1.0 - r * r).epsilon(1e-14));
    CHECK(Supernumber(1.0).rogers() == Complex(1.0, 0.0));
    CHECK((tA * tB).rogers() == Complex(0.0, 0.0));
}

TEST_CASE("rogers agrees with the independent Berezin-integral oracle") {
    std::mt19937_64 rng(2024);
    for (int k = 0; k < 200; ++k) {
        const Supernumber x = checks::random_supernumber(rng);
        CHECK(std::abs(x.rogers() - testutil::rogers_oracle(x)) < 1e-12);
    }
}

TEST_CASE("product agrees with the independent sorted-list oracle") {
    std::mt19937_64 rng(77);
    for (int k = 0; k < 100; ++k) {
        const Supernumber a = checks::random_supernumber(rng);
        const Supernumber b = checks::random_supernumber(rng);
        const auto oracle =
            testutil::PolyGrassmann::from(a).multiply(testutil::PolyGrassmann::from(b));
        const Supernumber got = a * b;
        for (unsigned m = 0; m < 16; ++m) {
            std::vector<int> gens;
            for (int g = 0; g < 4; ++g)
                if (m & (1u << g)) gens.push_back(g);
            CHECK(std::abs(got.coeff(m) - oracle.coeff(gens)) < 1e-12);
        }
    }
}

TEST_CASE("parity classification") {
    CHECK(tA.parity() == Parity::Odd);
    CHECK((Supernumber(1.0) + tA * tAh).parity() == Parity::Even);
    CHECK((Supernumber(1.0) + tA).parity() == Parity::Mixed);
    CHECK(Supernumber().parity() == Parity::Zero);
}

TEST_CASE("algebra law suite on seeded random supernumbers") {
    const auto result = checks::algebra_laws(42, 2000);
    INFO(result.detail);
    CHECK(result.pass);
    CHECK(result.worst <= 1e-12);
}

TEST_CASE("rogers equals body off the paired monomials") {
    std::mt19937_64 rng(5);
    for (int k = 0; k < 50; ++k) {
        Supernumber x = checks::random_supernumber(rng);
        x.set_coeff(0b0011, 0.0);
        x.set_coeff(0b1100, 0.0);
        x.set_coeff(0b1111, 0.0);
        CHECK(std::abs(x.rogers() - x.body()) == 0.0);
    }
}

TEST_CASE("debug string shows canonical monomials") {
    const Supernumber x = Supernumber(1.0) - 0.25 * (tA * tAh);
    const std::string s = x.to_string();
    CHECK(s.find("tA tA#") != std::string::npos);
    CHECK(s.find("(1+0i)") != std::string::npos);
    CHECK(s.find("(-0.25+0i)") != std::string::npos);
}
