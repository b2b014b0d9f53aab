#pragma once

#include <string>
#include <vector>

#include "hypertile/rational.hpp"

namespace hypertile {

// Tile parameters a <= b <= c with the derived classification:
// type 0 iff gcd(a,b,c) > 1 or a = b = c = 1, else type d = gcd(b-a, c-b).
// gcd(0,0) is taken as 0 so a = b = c routes through type 0 / the "otherwise"
// coefficient branch.
struct KSpec {
    int a = 1, b = 1, c = 1;
    int k = 3;          // a + b + c
    int g = 1;          // gcd(a, b, c)
    int d = 0;          // gcd(b - a, c - b)
    bool type0 = false; // otherwise type d (with g = 1)

    std::string str() const {
        return "K_{" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + "}";
    }
};

KSpec classify(int a, int b, int c);

// Value of the piecewise tiling-barrier coefficient: a rational from
// {1/4, 4/9, 1/2} or the irrational 6 - 4*sqrt(2), kept symbolic so equality
// tests stay exact.
struct ExactValue {
    enum class Kind { Rational, SixMinusFourSqrt2 };
    Kind kind = Kind::Rational;
    Rational rat;

    static ExactValue rational(Rational r) { return {Kind::Rational, r}; }
    static ExactValue six_minus_four_sqrt2() { return {Kind::SixMinusFourSqrt2, {}}; }

    double value() const;
    std::string str() const;
    friend bool operator==(const ExactValue& x, const ExactValue& y) {
        if (x.kind != y.kind) return false;
        return x.kind == Kind::SixMinusFourSqrt2 || x.rat == y.rat;
    }
};

ExactValue f_coefficient(const KSpec& spec);

enum class BarrierKind { SpaceI, SpaceII, DivI, DivII, DivIII, Tiling, SpaceGeneral };

const char* barrier_name(BarrierKind k);

// The construction attaining f for this spec (DivI, Tiling, DivIII or DivII).
BarrierKind f_barrier(const KSpec& spec);

struct ThresholdReport {
    ExactValue f;
    Rational space1;            // 1 - ((b+c)/k)^2
    Rational space2;            // ((a+b)/k)^2
    ExactValue coefficient;     // max of the three
    std::vector<BarrierKind> dominant;  // all attaining constructions
};

ThresholdReport threshold_coefficient(const KSpec& spec);

// Mycroft's codegree threshold coefficient for comparison.
Rational codegree_coefficient(const KSpec& spec);

// gcd(a+b, a+c, b+c) == 1 (the linear-combination fact used for odd-d specs).
bool check_gcd_fact(long long a, long long b, long long c);

}  // namespace hypertile
