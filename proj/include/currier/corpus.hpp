#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "currier/error.hpp"

namespace currier {

struct InstanceRef {
    std::string instance_id;
    std::string dataset_id;

    friend bool operator==(const InstanceRef&, const InstanceRef&) = default;
};

// Immutable, validated set of training instances. Input order is preserved
// and treated as the canonical order for all downstream tie-breaking.
class Corpus {
public:
    // Validates and takes ownership of the instance list.
    // Throws DuplicateInstanceId, EmptyCorpus or EmptyDatasetId.
    static Corpus validate(std::vector<InstanceRef> instances);

    const std::vector<InstanceRef>& instances() const { return instances_; }
    std::size_t size() const { return instances_.size(); }

    // Distinct dataset ids, sorted lexicographically.
    const std::vector<std::string>& datasets() const { return datasets_; }

    bool contains(const std::string& instance_id) const;
    // Position in corpus order; throws UnknownInstance when absent.
    std::size_t position_of(const std::string& instance_id) const;

private:
    Corpus() = default;

    std::vector<InstanceRef> instances_;
    std::vector<std::string> datasets_;
    std::unordered_map<std::string, std::size_t> index_;
};

using CorpusPtr = std::shared_ptr<const Corpus>;

enum class LogMode { AverageConfidence, CrossReview };

struct EpochConfidenceRecord {
    std::vector<double> confidences; // one entry per checkpoint, index j-1
};

struct CrossConfidenceRecord {
    int home_meta = 0;                // meta index k in [1, N]
    std::map<int, double> confidences; // meta index j != k -> confidence
};

// One confidence observation per corpus instance, stored in corpus order.
class ConfidenceLog {
public:
    LogMode mode() const { return mode_; }
    // E for AverageConfidence, N for CrossReview.
    int param() const { return param_; }
    const CorpusPtr& corpus() const { return corpus_; }

    const std::vector<EpochConfidenceRecord>& epoch_records() const;
    const std::vector<CrossConfidenceRecord>& cross_records() const;

private:
    friend ConfidenceLog ingest_confidence_log(std::istream&, const CorpusPtr&);

    LogMode mode_ = LogMode::AverageConfidence;
    int param_ = 0;
    CorpusPtr corpus_;
    std::vector<EpochConfidenceRecord> epoch_records_;
    std::vector<CrossConfidenceRecord> cross_records_;
};

// Parses a JSONL corpus file: one {"instance_id","dataset_id"} object per line.
std::vector<InstanceRef> parse_corpus_jsonl(std::istream& in);
void write_corpus_jsonl(const Corpus& corpus, std::ostream& out);

// Parses and validates a JSONL confidence log against the corpus. Line 1 is
// the header {"mode":...,"E":...} / {"mode":...,"N":...}; every subsequent
// line is one record. Exactly one record per corpus instance is required.
ConfidenceLog ingest_confidence_log(std::istream& in, const CorpusPtr& corpus);
void write_confidence_log(const ConfidenceLog& log, std::ostream& out);

Corpus load_corpus_file(const std::string& path);
ConfidenceLog load_confidence_log_file(const std::string& path, const CorpusPtr& corpus);

} // namespace currier
