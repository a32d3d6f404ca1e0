#pragma once

#include <stdexcept>
#include <string>

namespace expsearch {

enum class Errc {
  parse,
  disconnected,
  nonpositive_length,
  missing_root,
  duplicate_arc_id,
  point_is_node,
  not_a_tree,
  not_two_arc_connected,
  zero_length,
  interrupted_segment,
  cap_exceeded,
  no_convergence,
  out_of_range,
  bad_argument,
  internal,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace expsearch
