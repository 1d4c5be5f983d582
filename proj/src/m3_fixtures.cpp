#include <string_view>

namespace dmp::detail {

// 3-colorings of K_7, K_6, K_5 with no monochromatic degree-monotone path of
// order 3. Recovered once by the deterministic exhaustive hunt (least
// canonical code over all counterexamples, vertex and color symmetry), then
// committed here and under fixtures/. The K_7 coloring splits into three
// copies of K_{2,3} plus a disjoint edge, one per color.

extern const std::string_view m3_fixture_n7 =
    "kcoloring 7 3\n"
    "0 1 0\n"
    "0 2 0\n"
    "0 3 0\n"
    "0 4 1\n"
    "0 5 1\n"
    "0 6 2\n"
    "1 2 1\n"
    "1 3 2\n"
    "1 4 2\n"
    "1 5 2\n"
    "1 6 0\n"
    "2 3 2\n"
    "2 4 2\n"
    "2 5 2\n"
    "2 6 0\n"
    "3 4 1\n"
    "3 5 1\n"
    "3 6 0\n"
    "4 5 0\n"
    "4 6 1\n"
    "5 6 1\n";

extern const std::string_view m3_fixture_n6 =
    "kcoloring 6 3\n"
    "0 1 0\n"
    "0 2 0\n"
    "0 3 0\n"
    "0 4 1\n"
    "0 5 2\n"
    "1 2 1\n"
    "1 3 1\n"
    "1 4 2\n"
    "1 5 1\n"
    "2 3 2\n"
    "2 4 1\n"
    "2 5 0\n"
    "3 4 1\n"
    "3 5 0\n"
    "4 5 0\n";

extern const std::string_view m3_fixture_n5 =
    "kcoloring 5 3\n"
    "0 1 0\n"
    "0 2 0\n"
    "0 3 0\n"
    "0 4 1\n"
    "1 2 1\n"
    "1 3 1\n"
    "1 4 0\n"
    "2 3 2\n"
    "2 4 0\n"
    "3 4 0\n";

}  // namespace dmp::detail
