#include "polygraph/unipoly.hpp"

namespace polygraph::detail {

bool needs_parens(const std::string& coeff)
{
    return coeff.find_first_of("+-", 1) != std::string::npos;
}

std::string format_term(const std::string& coeff, bool is_one, bool is_minus_one,
                        const std::string& monomial, bool first)
{
    bool negative = false;
    std::string magnitude = coeff;
    if (needs_parens(coeff)) {
        magnitude = "(" + coeff + ")";
    } else if (!coeff.empty() && coeff[0] == '-') {
        negative = true;
        magnitude = coeff.substr(1);
    }
    std::string body;
    if (monomial.empty())
        body = magnitude;
    else if (is_one || is_minus_one)
        body = monomial;
    else
        body = magnitude + "*" + monomial;
    if (first)
        return (negative ? "-" : "") + body;
    return (negative ? " - " : " + ") + body;
}

} // namespace polygraph::detail
