#pragma once

#include <string>

#include "topols/pipe.hpp"

namespace topols::pipe {

// JSON schema: {version, cubes:[{id,pos:[x,y,z],kind,orientation?,color?,angle?}],
// pipes:[{a,b,dir,blue,red}], inputs:[ids], outputs:[ids],
// meta:{volume,time_steps}}; axes are "x"|"y"|"z", colors "blue"|"red".
std::string save_json(const PipeDiagram& p);
PipeDiagram load_json(const std::string& text);

bool same_structure(const PipeDiagram& a, const PipeDiagram& b);

}  // namespace topols::pipe
