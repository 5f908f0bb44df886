#include "vidreq/core/error.hpp"

namespace vidreq {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::MalformedManifest: return "MalformedManifest";
    case ErrorKind::DuplicateId: return "DuplicateId";
    case ErrorKind::MissingField: return "MissingField";
    case ErrorKind::InvalidRecord: return "InvalidRecord";
    case ErrorKind::EmptyFrame: return "EmptyFrame";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::InvalidDistribution: return "InvalidDistribution";
    case ErrorKind::InvalidStream: return "InvalidStream";
    case ErrorKind::BackendUnavailable: return "BackendUnavailable";
    case ErrorKind::ContractViolation: return "ContractViolation";
    case ErrorKind::MediaUnreadable: return "MediaUnreadable";
    case ErrorKind::RecordMismatch: return "RecordMismatch";
    case ErrorKind::InsufficientClassData: return "InsufficientClassData";
    case ErrorKind::EmptyTestSet: return "EmptyTestSet";
    case ErrorKind::UnknownSession: return "UnknownSession";
    case ErrorKind::UnassignedRecord: return "UnassignedRecord";
    case ErrorKind::ForeignAnnotator: return "ForeignAnnotator";
    case ErrorKind::KeySetMismatch: return "KeySetMismatch";
    case ErrorKind::UnresolvedDisagreement: return "UnresolvedDisagreement";
    case ErrorKind::EmptyCorpus: return "EmptyCorpus";
    case ErrorKind::KExceedsN: return "KExceedsN";
    case ErrorKind::SingleCluster: return "SingleCluster";
    case ErrorKind::TooFewDocuments: return "TooFewDocuments";
    case ErrorKind::EmptyCluster: return "EmptyCluster";
    case ErrorKind::DanglingBundle: return "DanglingBundle";
    case ErrorKind::MissingFrames: return "MissingFrames";
    case ErrorKind::MissingInput: return "MissingInput";
    case ErrorKind::InvalidConfig: return "InvalidConfig";
    case ErrorKind::Io: return "Io";
    }
    return "Unknown";
}

bool is_backend_failure(ErrorKind kind) {
    return kind == ErrorKind::BackendUnavailable || kind == ErrorKind::ContractViolation;
}

Error::Error(ErrorKind kind, std::string detail)
    : std::runtime_error(std::string(to_string(kind)) + ": " + detail),
      kind_(kind),
      detail_(std::move(detail)) {}

}  // namespace vidreq
