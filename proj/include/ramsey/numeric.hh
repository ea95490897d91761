/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef RAMSEY_GUARD_NUMERIC_HH
#define RAMSEY_GUARD_NUMERIC_HH 1

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace ramsey
{
    /// Arbitrary precision integer. Every count in the library is exact.
    using BigCount = boost::multiprecision::cpp_int;

    /// Exact fraction, always kept in lowest terms with a positive denominator.
    using Ratio = boost::multiprecision::cpp_rational;

    /// base^exp, with 0^0 = 1.
    auto power(const BigCount & base, unsigned exp) -> BigCount;
    auto power(const Ratio & base, unsigned exp) -> Ratio;

    auto factorial(unsigned n) -> BigCount;

    /// n (n - 1) ... (n - k + 1); zero when k > n.
    auto falling_factorial(unsigned n, unsigned k) -> BigCount;

    auto make_ratio(const BigCount & num, const BigCount & den) -> Ratio;

    /// "num/den" in lowest terms, denominator always written (e.g. "0/1", "4/1").
    auto fraction_string(const Ratio & r) -> std::string;

    auto count_string(const BigCount & c) -> std::string;

    /// Accepts "p/q", an integer, or a finite decimal such as "0.125"; the result is exact.
    auto parse_ratio(std::string_view text) -> Ratio;
}

#endif
