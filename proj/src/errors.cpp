#include "lagrange3/errors.hpp"

namespace lagrange3 {

const char* to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::OddRun: return "OddRun";
    case ErrorKind::NotPositive: return "NotPositive";
    case ErrorKind::BadShape: return "BadShape";
    case ErrorKind::NotDecodable: return "NotDecodable";
    case ErrorKind::NotTypeable: return "NotTypeable";
    case ErrorKind::Constant: return "Constant";
    case ErrorKind::EitherOp: return "EitherOp";
    case ErrorKind::MismatchBug: return "MismatchBug";
    case ErrorKind::Undecidable: return "Undecidable";
    case ErrorKind::BadSpec: return "BadSpec";
    case ErrorKind::NotIncreasing: return "NotIncreasing";
    case ErrorKind::NoDivergenceFound: return "NoDivergenceFound";
    case ErrorKind::NotFound: return "NotFound";
    case ErrorKind::NotMarkovNumber: return "NotMarkovNumber";
    case ErrorKind::InversionNotInteger: return "InversionNotInteger";
    case ErrorKind::DepthTooLarge: return "DepthTooLarge";
    case ErrorKind::BadArgument: return "BadArgument";
    }
    return "Unknown";
}

}  // namespace lagrange3
