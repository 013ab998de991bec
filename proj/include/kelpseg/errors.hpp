#ifndef KELPSEG_ERRORS_HPP
#define KELPSEG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace kelpseg {

// Base class for everything this library throws on purpose.
class KelpError : public std::runtime_error {
public:
    explicit KelpError(const std::string& msg) : std::runtime_error(msg) {}
};

#define KELPSEG_DEFINE_ERROR(Name)                                  \
    class Name : public KelpError {                                 \
    public:                                                         \
        explicit Name(const std::string& msg)                       \
            : KelpError(std::string(#Name) + ": " + msg) {}         \
    }

KELPSEG_DEFINE_ERROR(MissingBand);
KELPSEG_DEFINE_ERROR(ShapeMismatch);
KELPSEG_DEFINE_ERROR(NonBinaryMask);
KELPSEG_DEFINE_ERROR(DuplicateChipId);
KELPSEG_DEFINE_ERROR(EmptyDirectory);
KELPSEG_DEFINE_ERROR(InsufficientData);
KELPSEG_DEFINE_ERROR(InvalidSize);
KELPSEG_DEFINE_ERROR(InvalidPairing);
KELPSEG_DEFINE_ERROR(BackendUnavailable);
KELPSEG_DEFINE_ERROR(EmptyDataset);
KELPSEG_DEFINE_ERROR(EmptyGroup);
KELPSEG_DEFINE_ERROR(NonFiniteLoss);
KELPSEG_DEFINE_ERROR(InconsistentTotals);
KELPSEG_DEFINE_ERROR(ParseError);
KELPSEG_DEFINE_ERROR(ValidationError);
KELPSEG_DEFINE_ERROR(CheckpointNotFound);
KELPSEG_DEFINE_ERROR(IoError);

#undef KELPSEG_DEFINE_ERROR

} // namespace kelpseg

#endif // KELPSEG_ERRORS_HPP
