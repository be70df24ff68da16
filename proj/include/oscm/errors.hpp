#ifndef OSCM_ERRORS_HPP
#define OSCM_ERRORS_HPP

#include <stdexcept>
#include <string>

#include "oscm/instance.hpp"

namespace oscm {

// Thrown when an exhaustive operation is asked for a larger input than its
// guard allows. No silent fallback.
class SizeGuardError : public std::runtime_error {
   public:
    SizeGuardError(const std::string& what, vertex_t limit, vertex_t actual)
        : std::runtime_error(what + " (limit " + std::to_string(limit) + ", got " +
                             std::to_string(actual) + ")"),
          limit_(limit),
          actual_(actual) {}
    vertex_t limit() const { return limit_; }
    vertex_t actual() const { return actual_; }

   private:
    vertex_t limit_;
    vertex_t actual_;
};

}  // namespace oscm

#endif
