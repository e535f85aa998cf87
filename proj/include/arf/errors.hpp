#ifndef ARF_ERRORS_HPP_
#define ARF_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace arf {

enum class errc {
  invalid_argument,
  not_nonincreasing,
  no_suffix_sum_witness,
  non_canonical_tail,
  gluing_exceeds_compatibility,
  box_too_small,
  rank_too_large_for_twisted,
  not_comparable,
  not_members,
};

// Single exception type for the whole library; `index()` carries the 1-based
// offending entry or seam where one exists, 0 otherwise.
class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what, int index = 0)
      : std::runtime_error(what), code_(code), index_(index) {}

  errc code() const noexcept { return code_; }
  int index() const noexcept { return index_; }

 private:
  errc code_;
  int index_;
};

}  // namespace arf

#endif  // ARF_ERRORS_HPP_
