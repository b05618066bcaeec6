// Key-value property reports.
//
//   property=<name>
//   params=<k=v ...>
//   radius=<r>
//   status=pass|fail|inconclusive
//   violations=<n>
//   <key>=<value>                  (extra fields)
//   row ...                        (per-check results, when present)
//   witness ...                    (at most max_witnesses lines)
//
// Lines starting with "# " are for people and are ignored by snapshot
// comparisons.

#ifndef HIGGINS_REPORT_HPP_
#define HIGGINS_REPORT_HPP_

#include <cstddef>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace higgins {

  inline constexpr std::size_t max_witnesses = 100;

  struct Report {
    std::string                                      property;
    std::vector<std::pair<std::string, std::string>> params;
    std::size_t                                      radius     = 0;
    std::size_t                                      violations = 0;
    std::vector<std::string>                         witnesses;  // without "witness "
    std::vector<std::pair<std::string, std::string>> extra;      // after violations
    std::vector<std::string>                         rows;       // "row ..." lines
    std::vector<std::string>                         comments;
    // Set when the check could not be completed; never a pass.
    bool inconclusive = false;

    bool pass() const noexcept {
      return violations == 0 && !inconclusive;
    }
    Report& param(std::string key, std::string value) {
      params.emplace_back(std::move(key), std::move(value));
      return *this;
    }
    Report& set(std::string key, std::string value) {
      extra.emplace_back(std::move(key), std::move(value));
      return *this;
    }
    // Counts a violation; keeps the line if fewer than max_witnesses are held.
    void add_witness(std::string line);

    void        write(std::ostream& out) const;
    std::string str() const;
  };

  // The lines of a report text that are not comments or blank.
  std::vector<std::string> machine_lines(std::string const& text);

}  // namespace higgins

#endif  // HIGGINS_REPORT_HPP_
