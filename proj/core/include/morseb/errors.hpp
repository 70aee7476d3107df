#pragma once

#include <stdexcept>
#include <string>

namespace morseb {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define MORSEB_DEFINE_ERROR(Name)                                     \
    class Name : public Error {                                       \
    public:                                                           \
        explicit Name(const std::string& what) : Error(what) {}       \
    }

// complex construction and labeling
MORSEB_DEFINE_ERROR(NonManifoldError);
MORSEB_DEFINE_ERROR(DanglingVertexError);
MORSEB_DEFINE_ERROR(DuplicateTopSimplexError);
MORSEB_DEFINE_ERROR(LabelCountMismatchError);
MORSEB_DEFINE_ERROR(UnknownExampleError);
MORSEB_DEFINE_ERROR(ResolutionTooSmallError);

// exact linear algebra
MORSEB_DEFINE_ERROR(ArithmeticOverflowError);
MORSEB_DEFINE_ERROR(RankVerificationError);

// Morse data
MORSEB_DEFINE_ERROR(DegenerateVertexError);
MORSEB_DEFINE_ERROR(ModeMismatchError);
MORSEB_DEFINE_ERROR(MissingMorseValuesError);

// deformed operators
MORSEB_DEFINE_ERROR(ScaleOverflowError);
MORSEB_DEFINE_ERROR(NonpositiveWeightError);

// spectral
MORSEB_DEFINE_ERROR(ConvergenceFailureError);
MORSEB_DEFINE_ERROR(RequiresFullSpectrumError);
MORSEB_DEFINE_ERROR(ClusterAmbiguityError);

// model operators
MORSEB_DEFINE_ERROR(TruncationTooSmallError);
MORSEB_DEFINE_ERROR(GridTooCoarseError);
MORSEB_DEFINE_ERROR(EnergyCapTooSmallError);
MORSEB_DEFINE_ERROR(QuadratureFailureError);
MORSEB_DEFINE_ERROR(ScheduleTooShortError);

// verifier
MORSEB_DEFINE_ERROR(LengthMismatchError);
MORSEB_DEFINE_ERROR(NotOddDimensionalError);

// io
MORSEB_DEFINE_ERROR(ParseError);

#undef MORSEB_DEFINE_ERROR

} // namespace morseb
