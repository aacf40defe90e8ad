#pragma once

#include <map>
#include <string>

namespace jjalg::support {

// Regression fixture: fingerprints computed once by this toolkit.
inline const std::map<std::string, std::string> kFrozenFingerprints = {
    {"A_{0,1}", "dim=1 A^k=(1,0) class=2 nil=2 ann=1 der=1 assoc=1"},
    {"A_{0,1}+A_{0,1}", "dim=2 A^k=(2,0) class=2 nil=2 ann=2 der=4 assoc=1"},
    {"A_{1,2}", "dim=2 A^k=(2,1,0) class=3 nil=3 ann=1 der=2 assoc=1"},
    {"A_{0,1}+A_{0,1}+A_{0,1}", "dim=3 A^k=(3,0) class=2 nil=2 ann=3 der=9 assoc=1"},
    {"A_{1,2}+A_{0,1}", "dim=3 A^k=(3,1,0) class=3 nil=3 ann=2 der=5 assoc=1"},
    {"A_{1,3}", "dim=3 A^k=(3,1,0) class=3 nil=3 ann=1 der=4 assoc=1"},
    {"A_{0,1}^4", "dim=4 A^k=(4,0) class=2 nil=2 ann=4 der=16 assoc=1"},
    {"A_{1,2}+A_{0,1}^2", "dim=4 A^k=(4,1,0) class=3 nil=3 ann=3 der=10 assoc=1"},
    {"A_{1,3}+A_{0,1}", "dim=4 A^k=(4,1,0) class=3 nil=3 ann=2 der=8 assoc=1"},
    {"A_{1,2}+A_{1,2}", "dim=4 A^k=(4,2,0) class=3 nil=3 ann=2 der=6 assoc=1"},
    {"A_{1,4}", "dim=4 A^k=(4,2,0) class=3 nil=3 ann=2 der=7 assoc=1"},
    {"A_{2,4}", "dim=4 A^k=(4,1,0) class=3 nil=3 ann=1 der=7 assoc=1"},
    {"A_{NA,5}", "dim=5 A^k=(5,3,1,0) class=4 nil=3 ann=1 der=8 assoc=0"},
    {"A_{1,5}", "dim=5 A^k=(5,3,0) class=3 nil=3 ann=3 der=10 assoc=1"},
    {"A_{2,5}", "dim=5 A^k=(5,2,0) class=3 nil=3 ann=2 der=10 assoc=1"},
    {"A_{3,5}", "dim=5 A^k=(5,2,0) class=3 nil=3 ann=2 der=9 assoc=1"},
    {"A_{4,5}", "dim=5 A^k=(5,2,0) class=3 nil=3 ann=2 der=7 assoc=1"},
    {"A_{5,5}", "dim=5 A^k=(5,2,0) class=3 nil=3 ann=2 der=8 assoc=1"},
    {"A_{6,5}", "dim=5 A^k=(5,2,0) class=3 nil=3 ann=2 der=11 assoc=1"},
    {"A_{7,5}", "dim=5 A^k=(5,1,0) class=3 nil=3 ann=1 der=11 assoc=1"},
    {"A_{0,1}^5", "dim=5 A^k=(5,0) class=2 nil=2 ann=5 der=25 assoc=1"},
    {"A_{1,2}+A_{0,1}^3", "dim=5 A^k=(5,1,0) class=3 nil=3 ann=4 der=17 assoc=1"},
    {"A_{1,3}+A_{0,1}^2", "dim=5 A^k=(5,1,0) class=3 nil=3 ann=3 der=14 assoc=1"},
    {"A_{2,4}+A_{0,1}", "dim=5 A^k=(5,1,0) class=3 nil=3 ann=2 der=12 assoc=1"},
    {"A_{1,2}^2+A_{0,1}", "dim=5 A^k=(5,2,0) class=3 nil=3 ann=3 der=11 assoc=1"},
    {"A_{1,2}+A_{1,3}", "dim=5 A^k=(5,2,0) class=3 nil=3 ann=2 der=9 assoc=1"},
    {"A_{1,4}+A_{0,1}", "dim=5 A^k=(5,2,0) class=3 nil=3 ann=3 der=12 assoc=1"},
    {"A_{1,6}", "dim=6 A^k=(6,4,1,0) class=4 nil=3 ann=2 der=11 assoc=0"},
    {"A_{2,6}(0,0)", "dim=6 A^k=(6,3,1,0) class=4 nil=3 ann=2 der=12 assoc=0"},
    {"A_{2,6}(0,1)", "dim=6 A^k=(6,3,1,0) class=4 nil=3 ann=1 der=11 assoc=0"},
    {"A_{2,6}(1,0)", "dim=6 A^k=(6,3,1,0) class=4 nil=3 ann=1 der=11 assoc=0"},
    {"A_{2,6}(1,1)", "dim=6 A^k=(6,3,1,0) class=4 nil=3 ann=1 der=10 assoc=0"},
    {"Suttles", "dim=5 A^k=(5,3,3,3,3,3,3,3,3,3,3,3) class=none nil=4 ann=0 der=5 assoc=0"},
    {"H_1", "dim=3 A^k=(3,1,0) class=3 nil=3 ann=1 der=4 assoc=1"},
    {"H_2", "dim=5 A^k=(5,1,0) class=3 nil=3 ann=1 der=11 assoc=1"},
};

} // namespace jjalg::support
