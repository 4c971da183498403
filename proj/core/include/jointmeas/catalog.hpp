#pragma once

#include <string>
#include <vector>

#include "jointmeas/bloch.hpp"
#include "jointmeas/operators.hpp"

namespace jointmeas {

enum class ConfigKind { planar, platonic, pair, mub };

/// A parsed configuration id, e.g. "planar:M=3", "tetrahedron4",
/// "pair:1,0,0:0,1,0" or "mub:d=4".
struct ConfigRef {
  ConfigKind kind;
  std::string id;
  QubitConfig qubit;  // populated for the qubit kinds
  int mub_dim = 0;    // populated for kind == mub
};

ConfigRef parse_config_id(const std::string& id);

/// Fixed list of ids the CLI advertises (parametric families are sampled).
std::vector<std::string> catalog_ids();

/// Joint observable of the configuration's construction.
JointObservable construct_config(const ConfigRef& config);

/// Noise parameter achieved by the construction.
double construction_lambda(const ConfigRef& config);

/// Steering upper bound on the noise parameter.
double witness_bound(const ConfigRef& config);

}  // namespace jointmeas
