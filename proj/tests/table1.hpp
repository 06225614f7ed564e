#ifndef POLYGRAPH_TESTS_TABLE1_HPP
#define POLYGRAPH_TESTS_TABLE1_HPP

#include <map>
#include <string>

namespace polygraph::test {

/// Directed n-cycle conditions as printed, transcribed term by term
/// (juxtaposition written as '*', order kept).
inline const std::map<int, std::string>& printed_table()
{
    static const std::map<int, std::string> table{
        {2, "a + d"},
        {3, "a^2 + b*c + a*d + d^2"},
        {4, "a^2 + 2*b*c + d^2"},
        {5, "a^4 + 3*a^2*b*c + b^2*c^2 + a^3*d + 4*a*b*b*d + a^2*d^2 + 3*b*c*d^2 + a*d^3 + d^4"},
        {6, "3*b*c + a^2 - a*d + d^2"},
        {7, "8*c*a^3*b*d + 9*c*a^2*b*d^2 + 6*c^2*a^2*b^2 + 9*c^2*a*b^2*d + a^6 + 8*c*a*b*d^3 + 5*a^4*b*c + "
            "c^3*b^3 + 6*c^2*b^2*d^2 + 5*d^4*c*b + d*a^5 + d^2*a^4 + d^3*a^3 + d^4*a^2 + d^5*a + d^6"},
        {8, "2*c^2*b^2 + a^4 + d^4 + 4*a^2*b*c + 4*d*a*b*c + 4*c*b*d^2"},
        {9, "c^3*b^3 + 9*c^2*b^2*d^2 + 15*c^2*a*b^2*d + 9*c^2*a^2*b^2 + 6*c*a^3*b*d + 6*d^4*c*b + "
            "3*c*a^2*b*d^2 + 6*a^4*b*c + 6*c*a*b*d^3 + d^6 + a^6 + d^3*a^3"},
        {10, "5*c^2*b^2 - d*a^3 + d^2*a^2 + 5*c*b*d^2 + 5*a^2*b*c - d^3*a + d^4 + a^4"},
    };
    return table;
}

} // namespace polygraph::test

#endif
