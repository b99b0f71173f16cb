#pragma once

// Eigen 3.4 gives every dense expression a `const_iterator` typedef, which is
// `void` for non-vector shapes. Boost.Multiprecision probes that typedef when
// deciding whether cpp_int is constructible from a byte container, and the
// probe is a hard error on `void`. Treat such types as non-containers.

#include <type_traits>

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/traits/is_byte_container.hpp>

namespace boost::multiprecision::detail {
template <class C>
  requires std::is_void_v<typename C::const_iterator>
struct is_byte_container_imp<C, true> : boost::false_type {};
}  // namespace boost::multiprecision::detail

#include <boost/multiprecision/eigen.hpp>
