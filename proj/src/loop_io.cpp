#include "braidmod/loop_io.hpp"

#include <fstream>
#include <iomanip>

#include <json.hpp>

namespace braidmod {

PolynomialLoop read_loop(std::istream& in) {
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("read_loop: bad JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("samples"))
    throw std::invalid_argument("read_loop: need top-level fields 'n' and 'samples'");
  int n = j.at("n").get<int>();
  std::vector<LoopSample> samples;
  for (const auto& js : j.at("samples")) {
    LoopSample s;
    s.theta = js.at("theta").get<double>();
    for (const auto& jc : js.at("coeffs")) {
      if (!jc.is_array() || jc.size() != 2)
        throw std::invalid_argument("read_loop: coefficient must be a [re, im] pair");
      s.coeffs.emplace_back(jc[0].get<double>(), jc[1].get<double>());
    }
    samples.push_back(std::move(s));
  }
  double tol = j.value("closure_tolerance", 1e-9);
  return PolynomialLoop(n, std::move(samples), tol);
}

PolynomialLoop read_loop_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("read_loop_file: cannot open " + path);
  return read_loop(in);
}

void write_loop(std::ostream& out, const PolynomialLoop& loop) {
  nlohmann::json j;
  j["n"] = loop.degree();
  j["closure_tolerance"] = loop.closure_tolerance();
  auto& arr = j["samples"] = nlohmann::json::array();
  for (const auto& s : loop.samples()) {
    nlohmann::json js;
    js["theta"] = s.theta;
    auto& cs = js["coeffs"] = nlohmann::json::array();
    for (const auto& c : s.coeffs) cs.push_back({c.real(), c.imag()});
    arr.push_back(std::move(js));
  }
  out << j.dump(2) << '\n';
}

void write_track(std::ostream& out, const RootTrack& track) {
  out << std::setprecision(17);
  for (std::size_t t = 0; t < track.thetas.size(); ++t)
    for (int s = 0; s < track.degree; ++s)
      out << track.thetas[t] << '\t' << s << '\t' << track.positions[t][s].real()
          << '\t' << track.positions[t][s].imag() << '\n';
}

}  // namespace braidmod
