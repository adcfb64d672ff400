#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "ccauto/todd_coxeter.hpp"

#ifndef CCAUTO_CATALOG_PATH
#define CCAUTO_CATALOG_PATH "data/groups32.cat"
#endif

namespace ccauto::testing {

// Builds a group from a one-entry catalog snippet.
inline FiniteGroup make_group(const std::string& catalog_text) {
    Catalog cat = parse_catalog(catalog_text);
    if (cat.entries.size() != 1)
        throw std::runtime_error("make_group expects exactly one stanza");
    return enumerate_group(cat.entries[0]);
}

inline const Catalog& shipped_catalog() {
    static const Catalog cat = [] {
        std::ifstream in(CCAUTO_CATALOG_PATH);
        if (!in)
            throw std::runtime_error("cannot open " CCAUTO_CATALOG_PATH);
        std::ostringstream buf;
        buf << in.rdbuf();
        return parse_catalog(buf.str());
    }();
    return cat;
}

inline FiniteGroup catalog_group(const std::string& name) {
    const Presentation* p = shipped_catalog().find(name);
    if (!p)
        throw std::runtime_error("no catalog entry " + name);
    return enumerate_group(*p);
}

// Auxiliary presentations of orders 4..16, all prime-power (hence
// nilpotent) so every property suite applies.
inline const char* kAuxPresentations[] = {
    "group C4 expected_order 4\ngens x\nrel x^4\nend",
    "group V4 expected_order 4\ngens x y\nrel x^2\nrel y^2\nrel (x*y)^2\nend",
    "group C8 expected_order 8\ngens x\nrel x^8\nend",
    "group C2x2x2 expected_order 8\ngens x y z\nrel x^2\nrel y^2\nrel z^2\nrel [x,y]\nrel [x,z]\nrel [y,z]\nend",
    "group D8 expected_order 8\ngens x y\nrel x^4\nrel y^2\nrel (x*y)^2\nend",
    "group Q8 expected_order 8\ngens x y\nrel x^4\nrel y^2 = x^2\nrel y^-1*x*y = x^-1\nend",
    "group C9 expected_order 9\ngens x\nrel x^9\nend",
    "group C3x3 expected_order 9\ngens x y\nrel x^3\nrel y^3\nrel [x,y]\nend",
    "group C4x2 expected_order 8\ngens x y\nrel x^4\nrel y^2\nrel [x,y]\nend",
    "group D16 expected_order 16\ngens x y\nrel x^8\nrel y^2\nrel (x*y)^2\nend",
    "group SD16 expected_order 16\ngens x y\nrel x^8\nrel y^2\nrel y^-1*x*y = x^3\nend",
    "group Q16 expected_order 16\ngens x y\nrel x^8\nrel y^2 = x^4\nrel y^-1*x*y = x^-1\nend",
    "group M16 expected_order 16\ngens x y\nrel x^8\nrel y^2\nrel y^-1*x*y = x^5\nend",
    "group C4sC4 expected_order 16\ngens x y\nrel x^4\nrel y^4\nrel y^-1*x*y = x^-1\nend",
    "group C4x4 expected_order 16\ngens x y\nrel x^4\nrel y^4\nrel [x,y]\nend",
    "group Pauli16 expected_order 16\ngens x y z\nrel x^4\nrel y^2\nrel (x*y)^2\nrel z^2 = x^2\nrel [x,z]\nrel [y,z]\nend",
    "group C2wC4 expected_order 16\ngens u v s\nrel u^2\nrel v^2\nrel [u,v]\nrel s^4\nrel s^-1*u*s = v\nrel s^-1*v*s = u\nend",
};

} // namespace ccauto::testing
