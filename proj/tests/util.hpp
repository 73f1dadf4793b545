#pragma once

#include "godeaux/plane_curve.hpp"
#include "godeaux/scheme.hpp"

#include <random>

namespace testutil {

using namespace godeaux;

inline ProjPoint P(long a, long b, long c) { return ProjPoint(Scalar(a), Scalar(b), Scalar(c)); }

inline Rational rnd_rational(std::mt19937_64& rng, int bound = 9) {
    std::uniform_int_distribution<int> num(-bound, bound), den(1, 4);
    return Rational(num(rng), den(rng));
}

inline PlaneCurve random_curve(std::mt19937_64& rng, int d, int bound = 5, double density = 1.0) {
    std::uniform_int_distribution<int> c(-bound, bound);
    std::uniform_real_distribution<double> u(0, 1);
    PlaneCurve f(d);
    for (const auto& m : monomials(d))
        if (u(rng) < density) f.set(m, Scalar(c(rng)));
    return f;
}

inline Matrix random_invertible(std::mt19937_64& rng, int bound = 3) {
    std::uniform_int_distribution<int> c(-bound, bound);
    for (;;) {
        Matrix a(3, 3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) a.set(i, j, Scalar(c(rng)));
        if (!determinant(a).is_zero()) return a;
    }
}

}  // namespace testutil
