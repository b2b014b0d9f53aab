#include <doctest.h>

#include <numeric>

#include "hypertile/kspec.hpp"

using namespace hypertile;

namespace {

// Independent case evaluator written straight from the piecewise definition;
// deliberately separate from the production path (acceptance criterion 1
// compares across all a <= b <= c <= 12).
double f_reference(int a, int b, int c) {
    int g = std::gcd(a, std::gcd(b, c));
    int d = std::gcd(b - a, c - b);
    if (a == 1 && g == 1 && d == 1) return 0.25;
    if (a >= 2 && g == 1 && d == 1) return 6.0 - 4.0 * std::sqrt(2.0);
    if (g == 1 && d >= 3 && d % 2 == 1) return 4.0 / 9.0;
    return 0.5;
}

double threshold_reference(int a, int b, int c) {
    double k = a + b + c;
    double s1 = 1.0 - ((b + c) / k) * ((b + c) / k);
    double s2 = ((a + b) / k) * ((a + b) / k);
    return std::max({f_reference(a, b, c), s1, s2});
}

double codegree_reference(int a, int b, int c) {
    int g = std::gcd(a, std::gcd(b, c));
    int d = std::gcd(b - a, c - b);
    int k = a + b + c;
    if (g > 1 || (a == 1 && b == 1 && c == 1)) return 0.5;
    if (d == 1) return double(a) / k;
    int p = 2;
    while (d % p != 0) ++p;
    return std::max(double(a) / k, 1.0 / p);
}

}  // namespace

TEST_CASE("classify") {
    auto s = classify(1, 1, 1);
    CHECK(s.type0);
    CHECK(s.g == 1);
    CHECK(s.d == 0);

    s = classify(2, 2, 2);
    CHECK(s.type0);
    CHECK(s.g == 2);

    s = classify(1, 3, 5);
    CHECK_FALSE(s.type0);
    CHECK(s.d == 2);

    s = classify(1, 1, 2);
    CHECK_FALSE(s.type0);
    CHECK(s.d == 1);

    CHECK_THROWS_AS(classify(2, 1, 3), std::invalid_argument);
    CHECK_THROWS_AS(classify(0, 1, 1), std::invalid_argument);
}

TEST_CASE("f coefficient piecewise cases") {
    CHECK(f_coefficient(classify(1, 1, 2)) == ExactValue::rational(Rational(1, 4)));
    CHECK(f_coefficient(classify(2, 3, 7)) == ExactValue::six_minus_four_sqrt2());
    CHECK(f_coefficient(classify(1, 4, 7)) == ExactValue::rational(Rational(4, 9)));
    CHECK(f_coefficient(classify(1, 1, 1)) == ExactValue::rational(Rational(1, 2)));
    CHECK(f_coefficient(classify(2, 2, 2)) == ExactValue::rational(Rational(1, 2)));
    // scaling lands in the "otherwise" branch
    for (int m = 2; m <= 4; ++m)
        CHECK(f_coefficient(classify(1 * m, 2 * m, 4 * m)) ==
              ExactValue::rational(Rational(1, 2)));
}

TEST_CASE("threshold coefficient headline examples") {
    auto r = threshold_coefficient(classify(1, 1, 1));
    CHECK(r.coefficient == ExactValue::rational(Rational(5, 9)));
    REQUIRE(r.dominant.size() == 1);
    CHECK(r.dominant[0] == BarrierKind::SpaceI);

    r = threshold_coefficient(classify(1, 1, 2));
    CHECK(r.coefficient == ExactValue::rational(Rational(7, 16)));
    REQUIRE(r.dominant.size() == 1);
    CHECK(r.dominant[0] == BarrierKind::SpaceI);

    r = threshold_coefficient(classify(2, 3, 7));
    CHECK(r.coefficient == ExactValue::six_minus_four_sqrt2());
    CHECK(r.coefficient.value() == doctest::Approx(0.3431457505).epsilon(1e-9));
    REQUIRE(r.dominant.size() == 1);
    CHECK(r.dominant[0] == BarrierKind::Tiling);
    CHECK(r.space1 == Rational(44, 144));
    CHECK(r.space2 == Rational(25, 144));
}

TEST_CASE("threshold ties report all attaining barriers") {
    // (3,3,3): f = 1/2 (g=3), space1 = 1-(6/9)^2 = 5/9, space2 = 4/9 -> space1 wins
    auto r = threshold_coefficient(classify(3, 3, 3));
    CHECK(r.coefficient == ExactValue::rational(Rational(5, 9)));
    // engineered tie: (1,1,2) has f = space2 = 1/4 but neither dominates 7/16
    r = threshold_coefficient(classify(1, 1, 2));
    CHECK(r.dominant.size() == 1);
}

TEST_CASE("threshold_coefficient bounded by 5/9") {
    for (int a = 1; a <= 8; ++a)
        for (int b = a; b <= 8; ++b)
            for (int c = b; c <= 8; ++c) {
                auto r = threshold_coefficient(classify(a, b, c));
                CHECK(r.coefficient.value() <= 5.0 / 9.0 + 1e-12);
                CHECK(r.coefficient.value() > 0.0);
            }
}

TEST_CASE("coefficients agree with the independent evaluator up to 12") {
    for (int a = 1; a <= 12; ++a)
        for (int b = a; b <= 12; ++b)
            for (int c = b; c <= 12; ++c) {
                auto spec = classify(a, b, c);
                CHECK(f_coefficient(spec).value() == doctest::Approx(f_reference(a, b, c)).epsilon(1e-14));
                CHECK(threshold_coefficient(spec).coefficient.value() ==
                      doctest::Approx(threshold_reference(a, b, c)).epsilon(1e-14));
                CHECK(codegree_coefficient(spec).to_double() ==
                      doctest::Approx(codegree_reference(a, b, c)).epsilon(1e-14));
            }
}

TEST_CASE("codegree coefficient examples") {
    CHECK(codegree_coefficient(classify(1, 1, 2)) == Rational(1, 4));
    CHECK(codegree_coefficient(classify(1, 1, 1)) == Rational(1, 2));
    CHECK(codegree_coefficient(classify(1, 4, 7)) == Rational(1, 3));
    CHECK(codegree_coefficient(classify(1, 3, 5)) == Rational(1, 2));  // d=2, p=2
}

TEST_CASE("gcd fact examples and property sweep") {
    CHECK(check_gcd_fact(1, 2, 3));
    CHECK(check_gcd_fact(2, 3, 7));
    CHECK_FALSE(check_gcd_fact(1, 3, 5));  // d even, hypothesis fails

    // under the hypotheses (gcd 1, odd difference-gcd) the fact always holds
    for (int a = 1; a <= 50; ++a)
        for (int b = a; b <= 50; ++b)
            for (int c = b; c <= 50; ++c) {
                int g = std::gcd(a, std::gcd(b, c));
                int d = std::gcd(b - a, c - b);
                if (g != 1 || d % 2 == 0) continue;  // d = 0 counts as even here
                REQUIRE(check_gcd_fact(a, b, c));
            }
}
