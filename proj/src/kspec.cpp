#include "hypertile/kspec.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace hypertile {

KSpec classify(int a, int b, int c) {
    if (a < 1 || a > b || b > c) throw std::invalid_argument("need 1 <= a <= b <= c");
    KSpec s;
    s.a = a;
    s.b = b;
    s.c = c;
    s.k = a + b + c;
    s.g = std::gcd(a, std::gcd(b, c));
    s.d = std::gcd(b - a, c - b);  // gcd(0,0) = 0
    s.type0 = s.g > 1 || (a == 1 && b == 1 && c == 1);
    return s;
}

double ExactValue::value() const {
    if (kind == Kind::SixMinusFourSqrt2) return 6.0 - 4.0 * std::sqrt(2.0);
    return rat.to_double();
}

std::string ExactValue::str() const {
    if (kind == Kind::SixMinusFourSqrt2) return "6-4*sqrt(2)";
    return rat.str();
}

ExactValue f_coefficient(const KSpec& s) {
    if (s.g == 1 && s.d == 1) {
        if (s.a == 1) return ExactValue::rational(Rational(1, 4));
        return ExactValue::six_minus_four_sqrt2();
    }
    if (s.g == 1 && s.d >= 3 && s.d % 2 == 1) return ExactValue::rational(Rational(4, 9));
    return ExactValue::rational(Rational(1, 2));
}

BarrierKind f_barrier(const KSpec& s) {
    if (s.g == 1 && s.d == 1) return s.a == 1 ? BarrierKind::DivI : BarrierKind::Tiling;
    if (s.g == 1 && s.d >= 3 && s.d % 2 == 1) return BarrierKind::DivIII;
    return BarrierKind::DivII;
}

const char* barrier_name(BarrierKind k) {
    switch (k) {
        case BarrierKind::SpaceI: return "space1";
        case BarrierKind::SpaceII: return "space2";
        case BarrierKind::DivI: return "div1";
        case BarrierKind::DivII: return "div2";
        case BarrierKind::DivIII: return "div3";
        case BarrierKind::Tiling: return "tiling";
        case BarrierKind::SpaceGeneral: return "space-general";
    }
    return "?";
}

ThresholdReport threshold_coefficient(const KSpec& s) {
    ThresholdReport rep;
    rep.f = f_coefficient(s);
    Rational bc(s.b + s.c, s.k);
    Rational ab(s.a + s.b, s.k);
    rep.space1 = Rational(1) - bc * bc;
    rep.space2 = ab * ab;

    if (rep.f.kind == ExactValue::Kind::Rational) {
        // All three exact rationals: max and ties are exact.
        Rational mx = std::max({rep.f.rat, rep.space1, rep.space2});
        if (rep.f.rat == mx) rep.dominant.push_back(f_barrier(s));
        if (rep.space1 == mx) rep.dominant.push_back(BarrierKind::SpaceI);
        if (rep.space2 == mx) rep.dominant.push_back(BarrierKind::SpaceII);
        rep.coefficient = ExactValue::rational(mx);
        return rep;
    }

    // f = 6-4*sqrt(2) is irrational and never ties a rational; the double
    // image with 1e-12 slack decides it against the (small-denominator)
    // space coefficients.
    Rational smax = std::max(rep.space1, rep.space2);
    if (rep.f.value() > smax.to_double() + 1e-12) {
        rep.dominant.push_back(f_barrier(s));
        rep.coefficient = rep.f;
    } else {
        if (rep.space1 == smax) rep.dominant.push_back(BarrierKind::SpaceI);
        if (rep.space2 == smax) rep.dominant.push_back(BarrierKind::SpaceII);
        rep.coefficient = ExactValue::rational(smax);
    }
    return rep;
}

Rational codegree_coefficient(const KSpec& s) {
    if (s.type0) return Rational(1, 2);
    if (s.d == 1) return Rational(s.a, s.k);
    int p = 2;
    while (s.d % p != 0) ++p;  // smallest prime factor of d >= 2
    return std::max(Rational(s.a, s.k), Rational(1, p));
}

bool check_gcd_fact(long long a, long long b, long long c) {
    long long g = std::gcd(a + b, std::gcd(a + c, b + c));
    return g == 1;
}

}  // namespace hypertile
