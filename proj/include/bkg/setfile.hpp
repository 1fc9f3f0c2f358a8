#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "bkg/verify.hpp"

namespace bkg {

/// Overrides for plain-text imports, which carry no parameters of their own.
struct SetFileOverrides {
    std::optional<unsigned> k;
    std::optional<u64> g;
    std::optional<u64> cyclic_modulus;
};

/// Canonical JSON set file:
///   {"k": int, "g": int, "group": "integers" | {"cyclic": m},
///    "elements": [ints]}
/// Extra keys are permitted and ignored on read.
CandidateSet read_set_json(std::istream& in, const SetFileOverrides& o = {});

/// One integer per line; k/g/group come from the overrides (k and g required).
CandidateSet read_set_text(std::istream& in, const SetFileOverrides& o);

/// Dispatch on extension: ".json" -> JSON, anything else -> plain text.
CandidateSet read_set_file(const std::string& path, const SetFileOverrides& o = {});

std::string set_to_json(const CandidateSet& set);
void write_set_file(const std::string& path, const CandidateSet& set);

}  // namespace bkg
