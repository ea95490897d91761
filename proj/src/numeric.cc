/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <ramsey/numeric.hh>
#include <ramsey/errors.hh>

#include <cctype>

using std::string;
using std::string_view;

namespace ramsey
{
    namespace
    {
        auto parse_integer(string_view text, bool allow_sign) -> BigCount
        {
            bool negative = false;
            if (allow_sign && ! text.empty() && (text.front() == '-' || text.front() == '+')) {
                negative = text.front() == '-';
                text.remove_prefix(1);
            }
            if (text.empty())
                throw ParseError{ "expected digits in rational" };

            BigCount result = 0;
            for (char c : text) {
                if (! std::isdigit(static_cast<unsigned char>(c)))
                    throw ParseError{ "unexpected character '" + string(1, c) + "' in rational" };
                result = result * 10 + (c - '0');
            }
            return negative ? BigCount(-result) : result;
        }
    }

    auto power(const BigCount & base, unsigned exp) -> BigCount
    {
        return boost::multiprecision::pow(base, exp);
    }

    auto power(const Ratio & base, unsigned exp) -> Ratio
    {
        Ratio result = 1, b = base;
        while (exp > 0) {
            if (exp & 1)
                result *= b;
            b *= b;
            exp >>= 1;
        }
        return result;
    }

    auto factorial(unsigned n) -> BigCount
    {
        BigCount result = 1;
        for (unsigned i = 2 ; i <= n ; ++i)
            result *= i;
        return result;
    }

    auto falling_factorial(unsigned n, unsigned k) -> BigCount
    {
        if (k > n)
            return 0;
        BigCount result = 1;
        for (unsigned i = 0 ; i < k ; ++i)
            result *= (n - i);
        return result;
    }

    auto make_ratio(const BigCount & num, const BigCount & den) -> Ratio
    {
        if (den == 0)
            throw InvalidArgument{ "zero denominator" };
        return den < 0 ? Ratio{ -num, -den } : Ratio{ num, den };
    }

    auto fraction_string(const Ratio & r) -> string
    {
        return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
    }

    auto count_string(const BigCount & c) -> string
    {
        return c.str();
    }

    auto parse_ratio(string_view text) -> Ratio
    {
        while (! text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
            text.remove_prefix(1);
        while (! text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
            text.remove_suffix(1);
        if (text.empty())
            throw ParseError{ "empty rational" };

        if (auto slash = text.find('/') ; slash != string_view::npos) {
            BigCount num = parse_integer(text.substr(0, slash), true);
            BigCount den = parse_integer(text.substr(slash + 1), false);
            if (den == 0)
                throw ParseError{ "zero denominator in rational '" + string(text) + "'" };
            return make_ratio(num, den);
        }

        if (auto dot = text.find('.') ; dot != string_view::npos) {
            auto whole = text.substr(0, dot);
            auto frac = text.substr(dot + 1);
            bool negative = ! whole.empty() && whole.front() == '-';
            if (! whole.empty() && (whole.front() == '-' || whole.front() == '+'))
                whole.remove_prefix(1);
            BigCount w = whole.empty() ? BigCount(0) : parse_integer(whole, false);
            BigCount f = frac.empty() ? BigCount(0) : parse_integer(frac, false);
            if (whole.empty() && frac.empty())
                throw ParseError{ "malformed decimal '" + string(text) + "'" };
            BigCount scale = power(BigCount(10), static_cast<unsigned>(frac.size()));
            Ratio r = make_ratio(w * scale + f, scale);
            return negative ? Ratio(-r) : r;
        }

        return Ratio{ parse_integer(text, true) };
    }
}
