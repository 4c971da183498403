#include "jointmeas/catalog.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

#include "jointmeas/mub.hpp"
#include "jointmeas/steering.hpp"

namespace jointmeas {

namespace {

int parse_positive_int(std::string_view text, const char* what) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || value <= 0) {
    throw std::invalid_argument(std::string(what) + ": bad integer '" +
                                std::string(text) + "'");
  }
  return value;
}

BlochVector parse_vector(std::string_view text) {
  double coords[3];
  std::size_t start = 0;
  for (int i = 0; i < 3; ++i) {
    const std::size_t comma = text.find(',', start);
    const bool last = i == 2;
    if (last != (comma == std::string_view::npos)) {
      throw std::invalid_argument("parse_config_id: vector needs 3 components");
    }
    const std::string_view part =
        text.substr(start, last ? std::string_view::npos : comma - start);
    const std::string buf(part);
    std::size_t used = 0;
    coords[i] = std::stod(buf, &used);
    if (used != buf.size()) {
      throw std::invalid_argument("parse_config_id: bad vector component '" +
                                  buf + "'");
    }
    start = comma + 1;
  }
  BlochVector v(coords[0], coords[1], coords[2]);
  const double norm = v.norm();
  if (norm < 1e-12) {
    throw std::invalid_argument("parse_config_id: zero vector");
  }
  return v / norm;
}

}  // namespace

ConfigRef parse_config_id(const std::string& id) {
  ConfigRef config;
  config.id = id;
  if (id.rfind("planar:M=", 0) == 0) {
    config.kind = ConfigKind::planar;
    config.qubit = planar_config(parse_positive_int(
        std::string_view(id).substr(9), "parse_config_id"));
    return config;
  }
  if (id.rfind("mub:d=", 0) == 0) {
    config.kind = ConfigKind::mub;
    config.mub_dim =
        parse_positive_int(std::string_view(id).substr(6), "parse_config_id");
    if (config.mub_dim < 2) {
      throw std::invalid_argument("parse_config_id: mub needs d >= 2");
    }
    return config;
  }
  if (id.rfind("pair:", 0) == 0) {
    const std::string_view rest = std::string_view(id).substr(5);
    const std::size_t sep = rest.find(':');
    if (sep == std::string_view::npos) {
      throw std::invalid_argument("parse_config_id: pair needs two vectors");
    }
    config.kind = ConfigKind::pair;
    config.qubit.name = id;
    config.qubit.targets = {parse_vector(rest.substr(0, sep)),
                            parse_vector(rest.substr(sep + 1))};
    return config;
  }
  if (id == "octahedron3" || id == "tetrahedron4" || id == "icosahedron6" ||
      id == "dodecahedron10") {
    config.kind = ConfigKind::platonic;
    config.qubit = platonic_config(id);
    return config;
  }
  throw std::invalid_argument("parse_config_id: unknown config id '" + id + "'");
}

std::vector<std::string> catalog_ids() {
  return {
      "planar:M=2",   "planar:M=3",   "planar:M=4",  "planar:M=5",
      "planar:M=6",   "octahedron3",  "tetrahedron4", "icosahedron6",
      "dodecahedron10", "mub:d=2",    "mub:d=3",     "mub:d=4",
      "pair:1,0,0:0,1,0",
  };
}

JointObservable construct_config(const ConfigRef& config) {
  switch (config.kind) {
    case ConfigKind::planar:
    case ConfigKind::platonic:
      return adaptive_joint(config.qubit);
    case ConfigKind::pair:
      return optimal_pair(config.qubit.targets[0], config.qubit.targets[1]).joint;
    case ConfigKind::mub:
      return mub_joint(fourier_mub(config.mub_dim));
  }
  throw std::logic_error("construct_config: unreachable");
}

double construction_lambda(const ConfigRef& config) {
  switch (config.kind) {
    case ConfigKind::planar:
    case ConfigKind::platonic:
      return marginal_noise(config.qubit).front();
    case ConfigKind::pair:
      return optimal_pair(config.qubit.targets[0], config.qubit.targets[1]).lambda;
    case ConfigKind::mub:
      return mub_lambda(config.mub_dim);
  }
  throw std::logic_error("construction_lambda: unreachable");
}

double witness_bound(const ConfigRef& config) {
  switch (config.kind) {
    case ConfigKind::planar:
    case ConfigKind::platonic:
    case ConfigKind::pair:
      return qubit_bound(config.qubit.targets);
    case ConfigKind::mub:
      return mub_threshold(config.mub_dim);
  }
  throw std::logic_error("witness_bound: unreachable");
}

}  // namespace jointmeas
