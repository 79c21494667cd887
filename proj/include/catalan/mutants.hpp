#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "catalan/verify.hpp"

// Deliberately broken involutions. The verification checks must reject each of them.
namespace catalan::mutants {

// Toggles the last level step instead of the first.
TwoMotzkinPath upsilon_toggle_last(const TwoMotzkinPath& p);
// Leaves Case 2 trees (internal first child) unchanged.
PlaneTree phi_skip_case2(const PlaneTree& t);
// Flips the pure match with the smallest label when one exists, else the usual mixed match.
LabelledTree psi_flip_pure(const LabelledTree& t);

// "upsilon-last", "phi-skip-case2", "psi-pure"
std::vector<std::string_view> names();
// Reference maps with the named map swapped for its mutant.
std::optional<InvolutionMaps> maps_with(std::string_view name);

}  // namespace catalan::mutants
