#pragma once

#include <string>

namespace smalleps {

/// Proof status of an eventual claim. Proved* verdicts are symbolic or
/// bracket-separation proofs; Evidence records a bounded stage check on a
/// piecewise net; Unknown carries no information either way.
struct Verdict {
    enum class Status { ProvedTrue, ProvedFalse, EvidenceTrue, EvidenceFalse, Unknown };
    enum class Provenance { SymbolicProof, BracketSeparation, CertificateFact, StageEvidence, None };

    Status status = Status::Unknown;
    Provenance provenance = Provenance::None;
    int stages_checked = 0;

    static Verdict proved(bool b, Provenance p = Provenance::SymbolicProof) {
        return {b ? Status::ProvedTrue : Status::ProvedFalse, p, 0};
    }
    static Verdict evidence(bool b, int stages) {
        return {b ? Status::EvidenceTrue : Status::EvidenceFalse, Provenance::StageEvidence, stages};
    }
    static Verdict unknown() { return {}; }

    bool proved_true() const { return status == Status::ProvedTrue; }
    bool proved_false() const { return status == Status::ProvedFalse; }
    bool is_proved() const { return proved_true() || proved_false(); }
    bool is_evidence() const {
        return status == Status::EvidenceTrue || status == Status::EvidenceFalse;
    }
    /// Truth content ignoring proof grade; only meaningful when not Unknown.
    bool leaning_true() const {
        return status == Status::ProvedTrue || status == Status::EvidenceTrue;
    }
};

/// Kleene conjunction, keeping the weakest proof grade of the deciding side.
inline Verdict kleene_and(const Verdict& a, const Verdict& b) {
    if (a.proved_false()) return a;
    if (b.proved_false()) return b;
    if (a.proved_true() && b.proved_true()) {
        auto p = (a.provenance == b.provenance) ? a.provenance : Verdict::Provenance::SymbolicProof;
        return Verdict::proved(true, p);
    }
    if (a.status == Verdict::Status::EvidenceFalse) return a;
    if (b.status == Verdict::Status::EvidenceFalse) return b;
    if (a.status == Verdict::Status::Unknown || b.status == Verdict::Status::Unknown)
        return Verdict::unknown();
    int st = a.stages_checked > b.stages_checked ? b.stages_checked : a.stages_checked;
    if (st == 0) st = a.stages_checked + b.stages_checked;
    return Verdict::evidence(true, st);
}

inline Verdict kleene_or(const Verdict& a, const Verdict& b) {
    if (a.proved_true()) return a;
    if (b.proved_true()) return b;
    if (a.proved_false() && b.proved_false()) return Verdict::proved(false, a.provenance);
    if (a.status == Verdict::Status::EvidenceTrue) return a;
    if (b.status == Verdict::Status::EvidenceTrue) return b;
    if (a.status == Verdict::Status::Unknown || b.status == Verdict::Status::Unknown)
        return Verdict::unknown();
    int st = a.stages_checked > b.stages_checked ? b.stages_checked : a.stages_checked;
    if (st == 0) st = a.stages_checked + b.stages_checked;
    return Verdict::evidence(false, st);
}

inline Verdict kleene_not(const Verdict& a) {
    switch (a.status) {
        case Verdict::Status::ProvedTrue: return Verdict::proved(false, a.provenance);
        case Verdict::Status::ProvedFalse: return Verdict::proved(true, a.provenance);
        case Verdict::Status::EvidenceTrue: return Verdict::evidence(false, a.stages_checked);
        case Verdict::Status::EvidenceFalse: return Verdict::evidence(true, a.stages_checked);
        default: return Verdict::unknown();
    }
}

inline std::string to_string(Verdict::Status s) {
    switch (s) {
        case Verdict::Status::ProvedTrue: return "ProvedTrue";
        case Verdict::Status::ProvedFalse: return "ProvedFalse";
        case Verdict::Status::EvidenceTrue: return "EvidenceTrue";
        case Verdict::Status::EvidenceFalse: return "EvidenceFalse";
        default: return "Unknown";
    }
}

inline std::string provenance_string(const Verdict& v) {
    switch (v.provenance) {
        case Verdict::Provenance::SymbolicProof: return "symbolic-proof";
        case Verdict::Provenance::BracketSeparation: return "bracket";
        case Verdict::Provenance::CertificateFact: return "certificate";
        case Verdict::Provenance::StageEvidence:
            return "evidence(" + std::to_string(v.stages_checked) + ")";
        default: return "none";
    }
}

inline std::string to_string(const Verdict& v) { return to_string(v.status); }

}  // namespace smalleps
