#pragma once

// Published reference data, transcribed by hand. Nothing here is produced by
// the library; tests compare library output against these rows.

#include "extremal/chimat.hpp"
#include "extremal/genus.hpp"
#include "extremal/rational.hpp"

#include <string>
#include <vector>

namespace golden {

using extremal::CategoryId;
using extremal::Rational;

inline Rational R(const char* s) { return Rational::parse(s); }

struct CharacterRow {
    CategoryId category;
    Rational c;
    Rational vacuum_exponent;  // q-power in front of the vacuum series
    std::vector<Rational> vacuum;
    Rational module_shift;  // h_ext, relative to the vacuum exponent
    std::vector<Rational> module;
};

inline const std::vector<CharacterRow>& characters() {
    using C = CategoryId;
    static const std::vector<CharacterRow> rows = {
        {C::semion, 1, R("-1/24"), {1, 3, 4}, R("1/4"), {2, 2, 6}},
        {C::semion, 9, R("-9/24"), {1, 251, 4872}, R("1/4"), {2, 498, 8750}},
        {C::semion, 17, R("-17/24"), {1, 323, 60860}, R("5/4"), {1632, 162656, 4681120}},
        {C::semion, 33, R("-33/24"), {1, 3, 86004}, R("9/4"), {565760, 192053760}},
        {C::semion_bar, 7, R("-7/24"), {1, 133, 1673}, R("3/4"), {56, 968, 7504}},
        {C::semion_bar, 15, R("-15/24"), {1, 381, 38781}, R("3/4"), {56, 14856, 478512}},
        {C::semion_bar, 23, R("-23/24"), {1, 69, 131905}, R("7/4"), {32384, 4418944, 189846784}},
        {C::fib, R("14/5"), R("-7/60"), {1, 14, 42}, R("2/5"), {7, 34, 119}},
        {C::fib, R("54/5"), R("-27/60"), {1, 262, 7638}, R("2/5"), {7, 1770, 37419}},
        {C::fib, R("94/5"), R("-47/60"), {1, 188, 62087}, R("7/5"), {4794, 532134, 17518686}},
        {C::fib_bar, R("26/5"), R("-13/60"), {1, 52, 377}, R("3/5"), {26, 299, 1702}},
        {C::fib_bar, R("66/5"), R("-33/60"), {1, 300, 17397}, R("3/5"), {26, 6747, 183078}},
        // Printed with the exponent -33/60, a copy of the row above; -c/24 is -53/60.
        {C::fib_bar, R("106/5"), R("-53/60"), {1, 106, 84429}, R("8/5"), {15847, 1991846, 76895739}},
        {C::yang_lee, R("-22/5"), R("11/60"), {1, 0, 1}, R("-1/5"), {1, 1, 1}},
        {C::yang_lee, R("18/5"), R("-3/20"), {1, 248, 4125}, R("-1/5"), {1, 249, 4373}},
    };
    return rows;
}

struct PositiveRow {
    CategoryId category;
    Rational c;
    extremal::CharMatrix chi;
    Rational h;
    long n_max;
};

inline const std::vector<PositiveRow>& positive_rows() {
    using C = CategoryId;
    static const std::vector<PositiveRow> rows = {
        {C::semion, 1, {3, 26752, 2, -247}, R("1/4"), 0},
        {C::semion, 9, {251, 26752, 2, 1}, R("1/4"), 2},
        {C::semion, 17, {323, 88, 1632, -319}, R("5/4"), 0},
        {C::semion_bar, 7, {133, 1248, 56, -377}, R("3/4"), 0},
        {C::semion_bar, 15, {381, 1248, 56, -129}, R("3/4"), 1},
        {C::semion_bar, 23, {69, 10, 32384, -65}, R("7/4"), 0},
        {C::semion_dagger, 11, {-319, 1632, 88, 323}, R("3/4"), 0},
        {C::semion_dagger, 19, {-247, 2, 26752, 3}, R("7/4"), 2},
        {C::semion_dagger, 27, {1, 2, 26752, 251}, R("7/4"), 0},
        {C::semion_bar_dagger, 5, {-65, 32384, 10, 69}, R("1/4"), 0},
        {C::semion_bar_dagger, 13, {-377, 56, 1248, 133}, R("5/4"), 1},
        {C::semion_bar_dagger, 21, {-129, 56, 1248, 381}, R("5/4"), 0},
        {C::fib, R("14/5"), {14, 12857, 7, -258}, R("2/5"), 0},
        {C::fib, R("54/5"), {262, 12857, 7, -10}, R("2/5"), 1},
        {C::fib, R("94/5"), {188, 46, 4794, -184}, R("7/5"), 0},
        {C::fib_bar, R("26/5"), {52, 3774, 26, -296}, R("3/5"), 0},
        {C::fib_bar, R("66/5"), {300, 3774, 26, -48}, R("3/5"), 1},
        {C::fib_bar, R("106/5"), {106, 17, 15847, -102}, R("8/5"), 0},
        {C::yang_lee, R("58/5"), {-406, 902, 87, 410}, R("4/5"), 0},
        {C::yang_lee, R("98/5"), {-245, 1, 26999, 1}, R("9/5"), 2},
        {C::yang_lee, R("138/5"), {3, 1, 26999, 249}, R("9/5"), 0},
        {C::yang_lee_bar, R("22/5"), {-55, 32509, 11, 59}, R("1/5"), 1},
        {C::yang_lee_bar, R("62/5"), {-434, 57, 682, 190}, R("6/5"), 1},
        {C::yang_lee_bar, R("102/5"), {-186, 57, 682, 438}, R("6/5"), 1},
    };
    return rows;
}

struct NegativeRow {
    CategoryId category;
    Rational c;
    extremal::CharMatrix chi;
    Rational h;
    Rational alpha;
    Rational beta;
    long n_max;
    Rational chi10;
};

inline const std::vector<NegativeRow>& negative_rows() {
    using C = CategoryId;
    static const std::vector<NegativeRow> rows = {
        {C::semion, -7, {59, 13424640, R("1/88"), -55}, R("-3/4"), 114, R("1678080/11"), 0, R("1/88")},
        {C::semion, -15, {R("3441/11"), R("57264144384/11"), R("1/26752"), R("-669/11")}, R("-7/4"), R("4110/11"),
         R("23546112/121"), 0, R("1/26752")},
        {C::semion, -23, {R("713/11"), R("57264144384/11"), R("1/26752"), R("-3397/11")}, R("-7/4"), R("4110/11"),
         R("23546112/121"), 0, R("1/26752")},
        {C::semion_bar, -1, {R("49/5"), R("3281408/5"), R("1/10"), R("-29/5")}, R("-1/4"), R("78/5"),
         R("1640704/25"), 0, R("1/10")},
        {C::semion_bar, -9, {R("863/3"), R("747151360/3"), R("1/1248"), R("-107/3")}, R("-5/4"), R("970/3"),
         R("23348480/117"), 0, R("1/1248")},
        {C::semion_bar, -17, {R("119/3"), R("747151360/3"), R("1/1248"), R("-851/3")}, R("-5/4"), R("970/3"),
         R("23348480/117"), 0, R("1/1248")},
        {C::semion_dagger, 3, {249, 565760, R("1/2"), 3}, R("-1/4"), 246, 282880, 0, R("1/2")},
        {C::semion_dagger, -5, {1, 565760, R("1/2"), -245}, R("-1/4"), 246, 282880, 0, R("1/2")},
        {C::semion_dagger, -13, {R("299/3"), R("827924480/3"), R("1/1632"), R("-287/3")}, R("-5/4"), R("586/3"),
         R("1521920/9"), 0, R("1/1632")},
        {C::semion_bar_dagger, -3, {R("1857/7"), R("83232768/7"), R("1/56"), R("-93/7")}, R("-3/4"), R("1950/7"),
         R("10404096/49"), 0, R("1/56")},
        // chi01 and chi10 were printed as 827924480/3 and 1/1632 (copied from
        // the c = -13 row); alpha, beta and the chi10 column fix them as below.
        {C::semion_bar_dagger, -11, {R("121/7"), R("83232768/7"), R("1/56"), R("-1829/7")}, R("-3/4"), R("1950/7"),
         R("10404096/49"), 0, R("1/56")},
        {C::semion_bar_dagger, -19, {R("1501/11"), R("62591041536/11"), R("1/32384"), R("-1457/11")}, R("-7/4"),
         R("2958/11"), R("21260544/121"), 0, R("1/32384")},
        // h_ext was printed as -8/5 (copied from the rows below); that value
        // gives ell = 8. The admissible h_ext for this c is -3/5.
        {C::fib, R("-26/5"), {R("91/2"), R("13051833/2"), R("1/46"), R("-83/2")}, R("-3/5"), 87, R("567471/4"), 0,
         R("1/46")},
        {C::fib, R("-66/5"), {R("3966/13"), R("32712244109/13"), R("1/12857"), R("-690/13")}, R("-8/5"),
         R("4656/13"), R("33076081/169"), 0, R("1/12857")},
        {C::fib, R("-106/5"), {R("742/13"), R("32712244109/13"), R("1/12857"), R("-3914/13")}, R("-8/5"),
         R("4656/13"), R("33076081/169"), 0, R("1/12857")},
        {C::fib_bar, R("-14/5"), {26, 1951158, R("1/17"), -22}, R("-2/5"), 48, 114774, 0, R("1/17")},
        {C::fib_bar, R("-54/5"), {295, 745916226, R("1/3774"), -43}, R("-7/5"), 338, R("3359983/17"), 0,
         R("1/3774")},
        {C::fib_bar, R("-94/5"), {47, 745916226, R("1/3774"), -291}, R("-7/5"), 338, R("3359983/17"), 0,
         R("1/3774")},
        {C::yang_lee, R("18/5"), {248, 310124, 1, 4}, R("-1/5"), 244, 310124, 0, 1},
        {C::yang_lee, R("-22/5"), {0, 310124, 1, -244}, R("-1/5"), 244, 310124, 0, 1},
        {C::yang_lee, R("-62/5"), {R("1054/11"), R("1667924403/11"), R("1/902"), R("-1010/11")}, R("-6/5"),
         R("2064/11"), R("40681083/242"), 0, R("1/902")},
        {C::yang_lee_bar, R("-18/5"), {R("802/3"), R("35954954/3"), R("1/57"), R("-46/3")}, R("-4/5"), R("848/3"),
         R("1892366/9"), 0, R("1/57")},
        {C::yang_lee_bar, R("-58/5"), {R("58/3"), R("35954954/3"), R("1/57"), R("-790/3")}, R("-4/5"), R("848/3"),
         R("1892366/9"), 0, R("1/57")},
        // chi10 was printed as 1/323509 in both places; beta = 3346756/19
        // forces 1/32509.
        {C::yang_lee_bar, R("-98/5"), {140, 5726299516, R("1/32509"), -136}, R("-9/5"), 276, R("3346756/19"), 0,
         R("1/32509")},
    };
    return rows;
}

struct Extremes {
    CategoryId category;
    Rational c_min;
    Rational c_max;
};

inline const std::vector<Extremes>& extremes() {
    using C = CategoryId;
    static const std::vector<Extremes> rows = {
        {C::semion, -23, 57},
        {C::semion_bar, -17, 39},
        {C::semion_dagger, -13, 67},
        {C::semion_bar_dagger, -19, 37},
        {C::fib, R("-106/5"), R("174/5")},
        {C::fib_bar, R("-94/5"), R("186/5")},
        {C::yang_lee, R("-62/5"), R("338/5")},
        {C::yang_lee_bar, R("-98/5"), R("222/5")},
    };
    return rows;
}

struct Genus2 {
    CategoryId category;
    Rational c;
    Rational h_ext;
    long ell;
};

inline const std::vector<Genus2>& surviving() {
    using C = CategoryId;
    static const std::vector<Genus2> rows = {
        {C::semion, 1, R("1/4"), 0},          {C::semion, 9, R("1/4"), 4},
        {C::semion, 17, R("5/4"), 2},         {C::semion, 33, R("9/4"), 4},
        {C::semion_bar, 7, R("3/4"), 0},      {C::semion_bar, 15, R("3/4"), 4},
        {C::semion_bar, 23, R("7/4"), 2},     {C::fib, R("14/5"), R("2/5"), 0},
        {C::fib, R("54/5"), R("2/5"), 4},     {C::fib, R("94/5"), R("7/5"), 2},
        {C::fib_bar, R("26/5"), R("3/5"), 0}, {C::fib_bar, R("66/5"), R("3/5"), 4},
        {C::fib_bar, R("106/5"), R("8/5"), 2}, {C::yang_lee, R("-22/5"), R("-1/5"), 0},
        {C::yang_lee, R("18/5"), R("-1/5"), 4},
    };
    return rows;
}

}  // namespace golden
