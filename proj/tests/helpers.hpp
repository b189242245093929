#pragma once

#include <string>
#include <vector>

#include "mtc/pmat.hpp"

namespace testing {

inline mtc::Field F2() { return mtc::Field::create(2, 1); }
inline mtc::Field F3() { return mtc::Field::create(3, 1); }
inline mtc::Field F4() { return mtc::Field::create(2, 2, std::vector<unsigned>{1, 1, 1}); }
inline mtc::Field F9() { return mtc::Field::create(3, 2, std::vector<unsigned>{2, 2, 1}); }

inline mtc::Poly P(const mtc::Field& f, const std::string& s) { return mtc::parse_poly(f, s); }
inline mtc::Elem E(const mtc::Field& f, const std::string& s) { return mtc::parse_element(f, s); }
inline mtc::PolyMatrix PM(const mtc::Field& f, const std::vector<std::string>& rows) {
    return mtc::parse_poly_matrix(f, rows);
}

}  // namespace testing
