#pragma once

#include <stdexcept>
#include <string>

namespace tripack {

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DegenerateTriangle : Error { using Error::Error; };
struct CollinearPoints : Error { using Error::Error; };
struct InvalidAngles : Error { using Error::Error; };
struct SingularMap : Error { using Error::Error; };
struct DuplicateSites : Error { using Error::Error; };
struct SiteOutsideDomain : Error { using Error::Error; };
struct InvalidCount : Error { using Error::Error; };
struct TooFewPoints : Error { using Error::Error; };
struct NoInteriorVertices : Error { using Error::Error; };
struct SingularSystem : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };

} // namespace tripack
