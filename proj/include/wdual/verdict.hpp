#ifndef WDUAL_VERDICT_HPP
#define WDUAL_VERDICT_HPP

#include <string>

#include "wdual/exactmath.hpp"
#include "wdual/weights.hpp"

namespace wdual {

// Outcome of the respects-duality classifiers.  A Fails verdict carries a
// reproducible witness: the construction parameters, the weight d at which
// the dual enumerators differ, and the nonzero difference delta
// (chain family: A_d(C_k^perp) - A_d(D_k^perp); matrix family:
// A_d(D^perp) - A_d(C^perp)).
struct Verdict {
    enum class Kind { Respects, Fails, Unknown };

    Kind kind = Kind::Unknown;
    std::string rule;    // decision rule tag
    std::string detail;  // free-form explanation for Respects/Unknown

    // witness data (Fails only)
    long k = 0;  // chain: information-module index of the pair C_k/D_k
    long s = 0;  // matrix: swap rank (0 when the degenerate pair is used)
    long j = 0;  // matrix: degenerate block index (0 when a swap is used)
    long m = 0;  // matrix: information-module width used by the witness
    Int d = 0;
    Int delta = 0;

    static Verdict respects(std::string rule, std::string detail) {
        Verdict v;
        v.kind = Kind::Respects;
        v.rule = std::move(rule);
        v.detail = std::move(detail);
        return v;
    }
    static Verdict unknown(std::string rule, std::string detail) {
        Verdict v;
        v.kind = Kind::Unknown;
        v.rule = std::move(rule);
        v.detail = std::move(detail);
        return v;
    }
};

}  // namespace wdual

#endif
