#include "currier/corpus.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "currier/jsonl.hpp"

namespace currier {

Corpus Corpus::validate(std::vector<InstanceRef> instances) {
    if (instances.empty()) {
        throw Error(ErrorCode::EmptyCorpus, "corpus has no instances");
    }
    Corpus corpus;
    corpus.index_.reserve(instances.size());
    std::set<std::string> datasets;
    for (std::size_t pos = 0; pos < instances.size(); ++pos) {
        const InstanceRef& ref = instances[pos];
        if (ref.dataset_id.empty()) {
            throw Error(ErrorCode::EmptyDatasetId,
                        "instance \"" + ref.instance_id + "\" has an empty dataset_id");
        }
        if (!corpus.index_.emplace(ref.instance_id, pos).second) {
            throw Error(ErrorCode::DuplicateInstanceId,
                        "instance_id \"" + ref.instance_id + "\" appears more than once");
        }
        datasets.insert(ref.dataset_id);
    }
    corpus.instances_ = std::move(instances);
    corpus.datasets_.assign(datasets.begin(), datasets.end());
    return corpus;
}

bool Corpus::contains(const std::string& instance_id) const {
    return index_.count(instance_id) != 0;
}

std::size_t Corpus::position_of(const std::string& instance_id) const {
    auto it = index_.find(instance_id);
    if (it == index_.end()) {
        throw Error(ErrorCode::UnknownInstance,
                    "instance_id \"" + instance_id + "\" is not in the corpus");
    }
    return it->second;
}

const std::vector<EpochConfidenceRecord>& ConfidenceLog::epoch_records() const {
    if (mode_ != LogMode::AverageConfidence) {
        throw Error(ErrorCode::ModeMismatch, "log is not in average_confidence mode");
    }
    return epoch_records_;
}

const std::vector<CrossConfidenceRecord>& ConfidenceLog::cross_records() const {
    if (mode_ != LogMode::CrossReview) {
        throw Error(ErrorCode::ModeMismatch, "log is not in cross_review mode");
    }
    return cross_records_;
}

std::vector<InstanceRef> parse_corpus_jsonl(std::istream& in) {
    std::vector<InstanceRef> instances;
    std::size_t line_no = 0;
    while (auto obj = jsonl::next_object(in, line_no)) {
        instances.push_back({jsonl::get_string(*obj, "instance_id", line_no),
                             jsonl::get_string(*obj, "dataset_id", line_no)});
    }
    return instances;
}

void write_corpus_jsonl(const Corpus& corpus, std::ostream& out) {
    for (const InstanceRef& ref : corpus.instances()) {
        Json obj;
        obj["instance_id"] = ref.instance_id;
        obj["dataset_id"] = ref.dataset_id;
        out << obj.dump() << '\n';
    }
}

namespace {

double checked_confidence(double value, const std::string& instance_id) {
    if (!(value >= 0.0 && value <= 1.0)) {
        std::ostringstream msg;
        msg << "confidence " << value << " for instance \"" << instance_id
            << "\" is outside [0,1]";
        throw Error(ErrorCode::OutOfRange, msg.str());
    }
    return value;
}

} // namespace

ConfidenceLog ingest_confidence_log(std::istream& in, const CorpusPtr& corpus) {
    std::size_t line_no = 0;
    auto header = jsonl::next_object(in, line_no);
    if (!header) throw Error(ErrorCode::Parse, "confidence log is empty; header expected");

    ConfidenceLog log;
    log.corpus_ = corpus;
    const std::string mode = jsonl::get_string(*header, "mode", line_no);
    if (mode == "average_confidence") {
        log.mode_ = LogMode::AverageConfidence;
        log.param_ = static_cast<int>(jsonl::get_int(*header, "E", line_no));
        if (log.param_ < 1) throw Error(ErrorCode::Parse, "header E must be >= 1");
        log.epoch_records_.resize(corpus->size());
    } else if (mode == "cross_review") {
        log.mode_ = LogMode::CrossReview;
        log.param_ = static_cast<int>(jsonl::get_int(*header, "N", line_no));
        if (log.param_ < 2) throw Error(ErrorCode::Parse, "header N must be >= 2");
        log.cross_records_.resize(corpus->size());
    } else {
        throw Error(ErrorCode::Parse, "unknown mode \"" + mode + "\" in log header");
    }

    std::vector<bool> seen(corpus->size(), false);
    while (auto obj = jsonl::next_object(in, line_no)) {
        const std::string instance_id = jsonl::get_string(*obj, "instance_id", line_no);
        const std::string dataset_id = jsonl::get_string(*obj, "dataset_id", line_no);
        if (!corpus->contains(instance_id)) {
            throw Error(ErrorCode::UnknownInstance,
                        "record for \"" + instance_id + "\" does not match any corpus instance");
        }
        const std::size_t pos = corpus->position_of(instance_id);
        if (corpus->instances()[pos].dataset_id != dataset_id) {
            throw Error(ErrorCode::UnknownInstance,
                        "record for \"" + instance_id + "\" names dataset \"" + dataset_id +
                            "\" but the corpus has \"" + corpus->instances()[pos].dataset_id +
                            "\"");
        }
        if (seen[pos]) {
            throw Error(ErrorCode::DuplicateRecord,
                        "more than one record for instance \"" + instance_id + "\"");
        }
        seen[pos] = true;

        auto conf_it = obj->find("confidences");
        if (conf_it == obj->end()) {
            throw Error(ErrorCode::Parse,
                        "line " + std::to_string(line_no) + " missing field \"confidences\"");
        }

        if (log.mode_ == LogMode::AverageConfidence) {
            if (!conf_it->is_array()) {
                throw Error(ErrorCode::Parse, "line " + std::to_string(line_no) +
                                                  " confidences must be an array");
            }
            EpochConfidenceRecord rec;
            for (const auto& v : *conf_it) {
                if (!v.is_number()) {
                    throw Error(ErrorCode::Parse, "line " + std::to_string(line_no) +
                                                      " confidences must be numbers");
                }
                rec.confidences.push_back(checked_confidence(v.get<double>(), instance_id));
            }
            if (rec.confidences.size() != static_cast<std::size_t>(log.param_)) {
                throw Error(ErrorCode::ShapeMismatch,
                            "instance \"" + instance_id + "\" has " +
                                std::to_string(rec.confidences.size()) +
                                " confidences, expected E=" + std::to_string(log.param_));
            }
            log.epoch_records_[pos] = std::move(rec);
        } else {
            CrossConfidenceRecord rec;
            rec.home_meta = static_cast<int>(jsonl::get_int(*obj, "home_meta", line_no));
            if (rec.home_meta < 1 || rec.home_meta > log.param_) {
                throw Error(ErrorCode::ShapeMismatch,
                            "instance \"" + instance_id + "\" has home_meta " +
                                std::to_string(rec.home_meta) + " outside [1," +
                                std::to_string(log.param_) + "]");
            }
            if (!conf_it->is_object()) {
                throw Error(ErrorCode::Parse, "line " + std::to_string(line_no) +
                                                  " confidences must be an object");
            }
            for (auto it = conf_it->begin(); it != conf_it->end(); ++it) {
                int meta = 0;
                try {
                    std::size_t used = 0;
                    meta = std::stoi(it.key(), &used);
                    if (used != it.key().size()) throw std::invalid_argument(it.key());
                } catch (const std::exception&) {
                    throw Error(ErrorCode::Parse, "line " + std::to_string(line_no) +
                                                      " confidence key \"" + it.key() +
                                                      "\" is not a meta index");
                }
                if (!it.value().is_number()) {
                    throw Error(ErrorCode::Parse, "line " + std::to_string(line_no) +
                                                      " confidences must be numbers");
                }
                rec.confidences[meta] =
                    checked_confidence(it.value().get<double>(), instance_id);
            }
            // Key set must be exactly {1..N} minus the home meta.
            bool shape_ok = rec.confidences.size() == static_cast<std::size_t>(log.param_ - 1);
            if (shape_ok) {
                for (int j = 1; j <= log.param_; ++j) {
                    if (j == rec.home_meta) continue;
                    if (!rec.confidences.count(j)) { shape_ok = false; break; }
                }
            }
            if (!shape_ok) {
                throw Error(ErrorCode::ShapeMismatch,
                            "instance \"" + instance_id +
                                "\" confidences must cover every meta index except home_meta=" +
                                std::to_string(rec.home_meta));
            }
            log.cross_records_[pos] = std::move(rec);
        }
    }

    for (std::size_t pos = 0; pos < corpus->size(); ++pos) {
        if (!seen[pos]) {
            throw Error(ErrorCode::MissingInstance,
                        "no record for corpus instance \"" +
                            corpus->instances()[pos].instance_id + "\"");
        }
    }
    return log;
}

void write_confidence_log(const ConfidenceLog& log, std::ostream& out) {
    Json header;
    if (log.mode() == LogMode::AverageConfidence) {
        header["mode"] = "average_confidence";
        header["E"] = log.param();
    } else {
        header["mode"] = "cross_review";
        header["N"] = log.param();
    }
    out << header.dump() << '\n';

    const Corpus& corpus = *log.corpus();
    for (std::size_t pos = 0; pos < corpus.size(); ++pos) {
        const InstanceRef& ref = corpus.instances()[pos];
        Json obj;
        obj["instance_id"] = ref.instance_id;
        obj["dataset_id"] = ref.dataset_id;
        if (log.mode() == LogMode::AverageConfidence) {
            obj["confidences"] = log.epoch_records()[pos].confidences;
        } else {
            const CrossConfidenceRecord& rec = log.cross_records()[pos];
            obj["home_meta"] = rec.home_meta;
            Json conf = Json::object();
            for (const auto& [meta, value] : rec.confidences) {
                conf[std::to_string(meta)] = value;
            }
            obj["confidences"] = std::move(conf);
        }
        out << obj.dump() << '\n';
    }
}

Corpus load_corpus_file(const std::string& path) {
    auto in = jsonl::open_input(path);
    return Corpus::validate(parse_corpus_jsonl(in));
}

ConfidenceLog load_confidence_log_file(const std::string& path, const CorpusPtr& corpus) {
    auto in = jsonl::open_input(path);
    return ingest_confidence_log(in, corpus);
}

} // namespace currier
