#pragma once

#include <string>
#include <vector>

#include "operadforge/presentation.hpp"

namespace operadforge {

// Operad presets: com, lie, ass, poisson, lie2, ass2, ll, ll2, ll2dual.
// Algebra presets (need an arity argument): gv, gv2, gv2alt.
std::vector<std::string> operad_preset_names();
std::vector<std::string> algebra_preset_names();

bool is_operad_preset(const std::string& name);
bool is_algebra_preset(const std::string& name);

// Source text of a preset (throws on unknown name).
const std::string& operad_preset_text(const std::string& name);
std::string algebra_preset_text(const std::string& name, int n);

OperadPresentation operad_preset(const std::string& name);
AlgebraPresentation algebra_preset(const std::string& name, int n);

}  // namespace operadforge
