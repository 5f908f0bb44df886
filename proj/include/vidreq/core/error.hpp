#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace vidreq {

enum class ErrorKind {
    MalformedManifest,
    DuplicateId,
    MissingField,
    InvalidRecord,
    EmptyFrame,
    LengthMismatch,
    InvalidDistribution,
    InvalidStream,
    BackendUnavailable,
    ContractViolation,
    MediaUnreadable,
    RecordMismatch,
    InsufficientClassData,
    EmptyTestSet,
    UnknownSession,
    UnassignedRecord,
    ForeignAnnotator,
    KeySetMismatch,
    UnresolvedDisagreement,
    EmptyCorpus,
    KExceedsN,
    SingleCluster,
    TooFewDocuments,
    EmptyCluster,
    DanglingBundle,
    MissingFrames,
    MissingInput,
    InvalidConfig,
    Io,
};

std::string_view to_string(ErrorKind kind);

// Failures of an external backend (ASR, OCR, classifier, embedder). The CLI
// maps these to exit status 2; every other kind is a validation error.
bool is_backend_failure(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string detail);

    ErrorKind kind() const noexcept { return kind_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    ErrorKind kind_;
    std::string detail_;
};

}  // namespace vidreq
