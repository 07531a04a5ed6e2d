#include "aimbound/refs.hpp"

#include "aimbound/errors.hpp"

namespace aim::refs {

PotentialParams table_params(int table_id) {
    PotentialParams p;
    switch (table_id) {
        case 1: p.v0 = 1; p.v1 = -50; p.v2 = 2; break;
        case 2: p.v0 = 1; p.v1 = -50; p.v2 = 0; break;
        case 3: p.v0 = 2; p.v1 = -80; p.v2 = 120; break;
        case 4: p.v0 = 0; p.v1 = -70; p.v2 = 20; break;
        default: throw ConfigError("table id must be 1, 2, 3, or 4");
    }
    p.lambda = 1;
    p.ell = 0;
    return p;
}

std::vector<int> table_ells(int table_id) {
    if (table_id == 1 || table_id == 2) return {0};
    if (table_id == 3 || table_id == 4) return {0, 1, 2, 3};
    throw ConfigError("table id must be 1, 2, 3, or 4");
}

std::vector<Cell> reference_column(int table_id) {
    std::vector<Cell> out;
    switch (table_id) {
        case 1:
            for (int n = 0; n < 4; ++n) out.push_back({0, n, kT1Tra[n]});
            break;
        case 2:
            for (int n = 0; n < 4; ++n) out.push_back({0, n, kT2Aim[n]});
            break;
        case 3:
            out.assign(std::begin(kT3Csm), std::end(kT3Csm));
            break;
        case 4:
            out.assign(std::begin(kT4Aim), std::end(kT4Aim));
            break;
        default:
            throw ConfigError("table id must be 1, 2, 3, or 4");
    }
    return out;
}

}  // namespace aim::refs
