#ifndef CMSDEF_IO_HPP
#define CMSDEF_IO_HPP

#include <string>

#include "cmsdef/bipart.hpp"
#include "cmsdef/diagram.hpp"
#include "cmsdef/laurent.hpp"
#include "cmsdef/spectral.hpp"

namespace cmsdef {

/* text form: sum of terms "c * x1^a1 ... xN^aN", lexicographic order */
std::string to_text(const LaurentPoly& f);

/* {"dims":[n,m], "terms":[{"exp":[...],"coeff":"..."}]} */
std::string to_json(const LaurentPoly& f);
LaurentPoly laurent_from_json(const std::string& s);

std::string to_json(const EqClassReport& rep);
std::string to_json(const LocalAlgebraReport& rep, int json_indent = -1);

std::string bipartition_to_json(const Partition& lam, const Partition& mu);
std::pair<Partition, Partition> bipartition_from_json(const std::string& s);

/* matrices serialized row-major with Q(k) strings */
std::string to_json(const KMat& mat);

} // namespace cmsdef

#endif
