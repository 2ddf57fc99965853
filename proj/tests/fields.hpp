#pragma once

#include "shintani/field.hpp"

namespace shintani::testing {

inline FieldPtr qsqrt5()
{
    static const FieldPtr K = [] {
        FieldSpec s;
        s.name = "Q(sqrt5)";
        s.minpoly = {-1, -1, 1};
        return NumberField::create(s);
    }();
    return K;
}

inline FieldPtr qsqrt2()
{
    static const FieldPtr K = [] {
        FieldSpec s;
        s.name = "Q(sqrt2)";
        s.minpoly = {-2, 0, 1};
        return NumberField::create(s);
    }();
    return K;
}

inline FieldPtr cubic49()
{
    static const FieldPtr K = [] {
        FieldSpec s;
        s.name = "cubic49";
        s.minpoly = {1, -2, -1, 1};
        s.units = {{0, 1, 0}, {-1, 1, 0}};
        return NumberField::create(s);
    }();
    return K;
}

} // namespace shintani::testing
