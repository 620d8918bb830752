#include "plbandits/environments.hpp"

#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace plb {

std::vector<std::string> builtin_env_names() {
  return {"g1", "g4", "arith", "geo", "b1", "g4b", "arithb", "geob"};
}

PLInstance load_env(const std::string& name) {
  std::vector<double> theta;
  if (name == "g1") {
    theta.assign(16, 0.2);
    theta[0] = 0.8;
  } else if (name == "g4") {
    theta.assign(16, 0.01);
    theta[0] = 1.0;
    for (int i = 1; i <= 5; ++i) theta[i] = 0.7;
    for (int i = 6; i <= 10; ++i) theta[i] = 0.5;
  } else if (name == "arith") {
    for (int i = 0; i < 16; ++i) theta.push_back(1.0 - 0.06 * i);
  } else if (name == "geo") {
    double t = 1.0;
    for (int i = 0; i < 16; ++i, t *= 0.8) theta.push_back(t);
  } else if (name == "b1") {
    theta.assign(16, 0.6);
    theta[0] = 0.8;
  } else if (name == "g4b") {
    theta.assign(50, 0.01);
    theta[0] = 1.0;
    for (int i = 1; i <= 17; ++i) theta[i] = 0.7;
    for (int i = 18; i <= 44; ++i) theta[i] = 0.5;
  } else if (name == "arithb") {
    for (int i = 0; i < 50; ++i) theta.push_back(1.0 - 0.02 * i);
  } else if (name == "geob") {
    double t = 1.0;
    for (int i = 0; i < 50; ++i, t *= 0.9) theta.push_back(t);
  } else {
    throw std::out_of_range("unknown environment: " + name);
  }
  return PLInstance(std::move(theta));
}

PLInstance load_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open instance file: " + path);
  nlohmann::json j;
  in >> j;
  if (!j.contains("theta") || !j["theta"].is_array())
    throw std::runtime_error("instance file missing \"theta\" array: " + path);
  std::vector<double> theta = j["theta"].get<std::vector<double>>();
  return PLInstance(std::move(theta));
}

}  // namespace plb
