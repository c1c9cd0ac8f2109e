#ifndef MEXLET_ERRORS_HPP
#define MEXLET_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mexlet {

// Thrown when a request would exceed a hard size cap (cell counts, cubature
// degree).  Distinct from std::domain_error so callers can map it to a
// dedicated exit code.
class resource_error : public std::runtime_error {
 public:
  explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace mexlet

#endif  // MEXLET_ERRORS_HPP
