#pragma once

#include <stdexcept>

namespace meb {

// Base class for every error thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ShapeError : Error { using Error::Error; };             // dimension / role / symmetry mismatch
struct SingularError : Error { using Error::Error; };          // system not positive definite
struct NumericError : Error { using Error::Error; };           // non-finite value produced or supplied
struct RangeError : Error { using Error::Error; };             // argument outside its documented range
struct EmptyClipError : Error { using Error::Error; };
struct DegenerateLengthError : Error { using Error::Error; };  // too few frames to define the operator
struct PyramidDepthError : Error { using Error::Error; };
struct ValidationError : Error { using Error::Error; };
struct IoError : Error { using Error::Error; };
struct FormatError : Error { using Error::Error; };
struct NoSignalError : Error { using Error::Error; };

}  // namespace meb
