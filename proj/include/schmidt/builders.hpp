#ifndef SCHMIDT_BUILDERS_HPP
#define SCHMIDT_BUILDERS_HPP

#include <optional>
#include <string>

#include "schmidt/blocks.hpp"
#include "schmidt/series.hpp"

namespace schmidt {

/* Parsed parameters shared by the identity builders and verifiers.  Which
 * fields matter depends on the identity. */
struct IdentityParams {
    IndexSet S = IndexSet::odds();          // thm1.5 eqs (3)-(6)
    std::optional<ModMShape> shape;         // mod-m identities
    std::optional<BlockType> U;             // block identities
    int k = 1;                              // cor-unk/n2
    int m = 2;                              // thm3.2, cor1.11
    int l = 2;                              // cor1.11
    ColorAssignment assign;                 // applied identically to both sides
};

/* Builds the paper's right-hand side of the identity, expanded at the
 * caps, with the color assignment applied to every atomic color before
 * truncation (both sides of a verification use the same convention). */
TruncatedSeries build_rhs(const std::string& id, const IdentityParams& params, SeriesCaps caps);

/* 1/(a ; q^step)_infty with a = mono * q^{a_qpow} under the assignment. */
TruncatedSeries inv_pochhammer(const ColorMonomial& mono, int a_qpow, int step, SeriesCaps caps);

}  // namespace schmidt

#endif
