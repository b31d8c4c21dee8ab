#pragma once

#include <string>
#include <vector>

#include "plectic/plectic.hpp"

namespace plectic {

/// Built-in structures used across tests, manifests, and the CLI:
///   r3vol     volume form on the (x,y,z) chart, n=2
///   r3sphere  inverse-square volume multiple on the punctured (x,y,z) chart, n=2
///   hk4       flat quaternionic 4-form (six times the volume) on (x0..x3), n=3
///   pq6       dp_I ^ dq^I on the 6-dim chart, n=2
///   r2sym     area form on (x,y), n=1
///   oscpolar  r dr^t on the polar (r,t) chart, n=1
///   deg4      volume form of a 3-dim chart regarded on 4 variables (degenerate control)
PlecticStructure builtin_structure(const std::string& name);

std::vector<std::string> builtin_structure_names();

} // namespace plectic
