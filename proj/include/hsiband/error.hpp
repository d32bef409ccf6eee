#pragma once

#include <stdexcept>
#include <string>

namespace hsiband {

// Failure categories raised by loaders, metrics, and the selection /
// evaluation pipeline. The CLI maps any of these to exit code 1.
enum class errc {
  missing_file,
  malformed_header,
  unsupported_format,
  truncated_data,
  parse_error,
  shape_mismatch,
  label_out_of_range,
  invalid_levels,
  empty_band,
  invalid_spec,
  symbol_out_of_range,
  empty_input,
  length_mismatch,
  empty_histogram,
  no_pairs,
  level_overflow,
  level_mismatch,
  empty_cube,
  no_labeled_pixels,
  invalid_fraction,
  empty_subset,
  empty_train_set,
};

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace hsiband
