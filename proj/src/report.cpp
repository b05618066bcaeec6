#include "higgins/report.hpp"

#include <ostream>
#include <sstream>

namespace higgins {

  void Report::add_witness(std::string line) {
    ++violations;
    if (witnesses.size() < max_witnesses) {
      witnesses.push_back(std::move(line));
    }
  }

  void Report::write(std::ostream& out) const {
    out << "property=" << property << '\n';
    out << "params=";
    for (std::size_t i = 0; i < params.size(); ++i) {
      out << (i ? " " : "") << params[i].first << '=' << params[i].second;
    }
    out << '\n';
    out << "radius=" << radius << '\n';
    out << "status=" << (inconclusive ? "inconclusive" : pass() ? "pass" : "fail")
        << '\n';
    out << "violations=" << violations << '\n';
    for (auto const& [k, v] : extra) {
      out << k << '=' << v << '\n';
    }
    for (auto const& r : rows) {
      out << "row " << r << '\n';
    }
    for (auto const& w : witnesses) {
      out << "witness " << w << '\n';
    }
    if (violations > witnesses.size()) {
      out << "# " << witnesses.size() << " of " << violations
          << " witnesses shown\n";
    }
    for (auto const& c : comments) {
      out << "# " << c << '\n';
    }
  }

  std::string Report::str() const {
    std::ostringstream out;
    write(out);
    return out.str();
  }

  std::vector<std::string> machine_lines(std::string const& text) {
    std::vector<std::string> out;
    std::istringstream       in(text);
    std::string              line;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#') {
        continue;
      }
      out.push_back(line);
    }
    return out;
  }

}  // namespace higgins
