#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "bergman/geometry.hpp"
#include "bergman/tracer.hpp"

namespace bergman {

/// disk, square, annulus:r,R, ellipse:a,b, rect:w,h. Returns false for
/// anything else; throws Error(input) for a known name with bad parameters.
bool builtin_domain(const std::string& name, Domain& out);

/// The built-in set used by sweeps.
std::vector<std::string> builtin_domain_names();

/// Key = value domain description, see docs/domain_spec.md.
Domain parse_domain_spec(std::istream& in, const std::string& source = "<spec>");
Domain load_domain_spec(const std::string& path);

/// A built-in name or a spec file path.
Domain resolve_domain(const std::string& name_or_path);

/// "power k re im", "inverse k a_re a_im re im", "log a_re a_im re im".
ExpansionTerm parse_term(const std::string& text);

}  // namespace bergman
