// Copyright 2026 The egraph Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "egraph/errors.h"
#include "egraph/hashing.h"
#include "egraph/scorer.h"

namespace egraph {
namespace {

using json = nlohmann::json;

struct Endpoint {
  std::string base;  // scheme://host[:port]
  std::string path;  // request path
};

Endpoint ParseEndpoint(const std::string& location) {
  auto scheme = location.find("://");
  if (scheme == std::string::npos || location.substr(0, scheme) != "http") {
    throw ValidationError("remote scorer location must be http://host:port, "
                          "got '" + location + "'");
  }
  auto slash = location.find('/', scheme + 3);
  Endpoint ep;
  ep.base = location.substr(0, slash);
  std::string prefix =
      slash == std::string::npos ? "" : location.substr(slash);
  while (!prefix.empty() && prefix.back() == '/') prefix.pop_back();
  ep.path = prefix + "/score";
  return ep;
}

std::string FormatDouble(double v) {
  std::array<char, 64> buf;
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), end);
}

// Index of each canonical label in the handshake, or nullopt if the
// handshake is unusable.
std::optional<std::array<size_t, 3>> LabelOrder(const json& handshake) {
  if (!handshake.is_object() || !handshake.contains("labels") ||
      !handshake["labels"].is_array()) {
    return std::nullopt;
  }
  const auto& labels = handshake["labels"];
  std::array<size_t, 3> order{};
  const std::array<const char*, 3> names = {"entail", "contradict",
                                            "neutral"};
  for (size_t k = 0; k < names.size(); ++k) {
    bool found = false;
    for (size_t i = 0; i < labels.size(); ++i) {
      if (labels[i].is_string() && labels[i].get<std::string>() == names[k]) {
        order[k] = i;
        found = true;
      }
    }
    if (!found) return std::nullopt;
  }
  return order;
}

std::optional<NliLogits> ReadLogits(const json& row,
                                    const std::array<size_t, 3>& order,
                                    size_t num_labels) {
  auto finite_number = [](const json& v) {
    return v.is_number() && std::isfinite(v.get<double>());
  };
  if (row.contains("logits")) {
    const auto& l = row["logits"];
    if (!l.is_array() || l.size() != num_labels) return std::nullopt;
    for (size_t k : order) {
      if (!finite_number(l[k])) return std::nullopt;
    }
    return NliLogits{l[order[0]].get<double>(), l[order[1]].get<double>(),
                     l[order[2]].get<double>()};
  }
  for (const char* key : {"entail", "contradict", "neutral"}) {
    if (!row.contains(key) || !finite_number(row[key])) return std::nullopt;
  }
  return NliLogits{row["entail"].get<double>(),
                   row["contradict"].get<double>(),
                   row["neutral"].get<double>()};
}

// Sends one request for the given ids and stores whatever valid answers
// come back.
void Attempt(httplib::Client& client, const Endpoint& ep,
             const std::vector<std::string>& ids,
             const std::map<std::string, const SentencePair*>& by_id,
             std::map<std::string, NliLogits>& answers) {
  std::string body;
  for (const auto& id : ids) {
    const SentencePair* pair = by_id.at(id);
    json row = {{"id", id},
                {"premise", pair->premise},
                {"hypothesis", pair->hypothesis}};
    body += row.dump();
    body += '\n';
  }
  auto res = client.Post(ep.path, body, "application/x-ndjson");
  if (!res || res->status != 200) return;

  std::istringstream lines(res->body);
  std::string line;
  std::optional<std::array<size_t, 3>> order;
  size_t num_labels = 0;
  while (std::getline(lines, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    json row = json::parse(line, nullptr, /*allow_exceptions=*/false);
    if (row.is_discarded()) continue;
    if (!order) {
      order = LabelOrder(row);
      if (!order) return;
      num_labels = row["labels"].size();
      continue;
    }
    if (!row.is_object() || !row.contains("id") || !row["id"].is_string()) {
      continue;
    }
    auto id = row["id"].get<std::string>();
    if (!by_id.contains(id) || row.contains("error")) continue;
    if (auto logits = ReadLogits(row, *order, num_labels)) {
      answers[id] = *logits;
    }
  }
}

}  // namespace

std::string RequestId(std::string_view premise, std::string_view hypothesis) {
  std::string material(premise);
  material += '\n';
  material += hypothesis;
  return Sha256Hex(material);
}

std::vector<NliLogits> RemoteScoreBatch(std::span<const SentencePair> pairs,
                                        const ScorerSpec& spec) {
  spec.Validate();
  if (pairs.empty()) return {};
  const Endpoint ep = ParseEndpoint(spec.location);

  std::vector<std::string> ids;
  std::map<std::string, const SentencePair*> by_id;
  std::vector<std::string> unique_ids;
  for (const auto& p : pairs) {
    ids.push_back(RequestId(p.premise, p.hypothesis));
    if (by_id.emplace(ids.back(), &p).second) unique_ids.push_back(ids.back());
  }

  httplib::Client client(ep.base);
  auto secs = static_cast<time_t>(spec.timeout_seconds);
  auto usecs = static_cast<time_t>((spec.timeout_seconds - secs) * 1e6);
  client.set_connection_timeout(secs, usecs);
  client.set_read_timeout(secs, usecs);
  client.set_write_timeout(secs, usecs);

  std::map<std::string, NliLogits> answers;
  for (size_t start = 0; start < unique_ids.size();
       start += static_cast<size_t>(spec.batch_size)) {
    size_t stop = std::min(unique_ids.size(),
                           start + static_cast<size_t>(spec.batch_size));
    std::vector<std::string> pending(unique_ids.begin() + start,
                                     unique_ids.begin() + stop);
    for (int attempt = 0; attempt <= spec.max_retries && !pending.empty();
         ++attempt) {
      Attempt(client, ep, pending, by_id, answers);
      std::erase_if(pending,
                    [&](const std::string& id) { return answers.contains(id); });
    }
    if (!pending.empty()) {
      std::string msg = "remote scorer at " + spec.location + " gave no " +
                        "valid answer after " +
                        std::to_string(spec.max_retries + 1) +
                        " attempt(s) for ids:";
      for (const auto& id : pending) msg += " " + id;
      throw TransportError(msg);
    }
  }

  std::vector<NliLogits> out;
  out.reserve(ids.size());
  for (const auto& id : ids) out.push_back(answers.at(id));
  return out;
}

ScoreCache::ScoreCache(std::filesystem::path path) : path_(std::move(path)) {
  std::ifstream in(path_);
  if (!in) return;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string id, e, c, n;
    if (!std::getline(fields, id, '\t') || !std::getline(fields, e, '\t') ||
        !std::getline(fields, c, '\t') || !std::getline(fields, n, '\t')) {
      throw IoError(path_.string() + ":" + std::to_string(line_no) +
                    ": malformed cache row");
    }
    NliLogits logits;
    for (auto [text, dst] : {std::pair{&e, &logits.entail},
                             std::pair{&c, &logits.contradict},
                             std::pair{&n, &logits.neutral}}) {
      auto [ptr, ec] =
          std::from_chars(text->data(), text->data() + text->size(), *dst);
      if (ec != std::errc() || ptr != text->data() + text->size()) {
        throw IoError(path_.string() + ":" + std::to_string(line_no) +
                      ": malformed cache value");
      }
    }
    entries_[id] = logits;
  }
}

std::optional<NliLogits> ScoreCache::Find(const std::string& id) const {
  auto it = entries_.find(id);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void ScoreCache::Put(const std::string& id, const NliLogits& logits) {
  if (entries_.contains(id)) return;
  if (path_.has_parent_path()) {
    std::filesystem::create_directories(path_.parent_path());
  }
  std::ofstream out(path_, std::ios::app);
  if (!out) throw IoError("cannot append to cache " + path_.string());
  out << id << '\t' << FormatDouble(logits.entail) << '\t'
      << FormatDouble(logits.contradict) << '\t'
      << FormatDouble(logits.neutral) << '\n';
  entries_[id] = logits;
}

RemoteScorer::RemoteScorer(ScorerSpec spec) : spec_(std::move(spec)) {
  spec_.Validate();
  ParseEndpoint(spec_.location);
  if (!spec_.cache_path.empty()) cache_.emplace(spec_.cache_path);
}

std::vector<std::optional<double>> RemoteScorer::Score(
    std::span<const ScoreQuery> batch) {
  std::vector<std::optional<double>> out(batch.size());
  std::vector<SentencePair> misses;
  std::vector<size_t> miss_index;
  for (size_t i = 0; i < batch.size(); ++i) {
    const auto& q = batch[i];
    if (cache_) {
      if (auto hit = cache_->Find(
              RequestId(q.premise_sentence, q.hypothesis_sentence))) {
        out[i] = EntailProbability(*hit);
        continue;
      }
    }
    misses.push_back({q.premise_sentence, q.hypothesis_sentence});
    miss_index.push_back(i);
  }
  auto logits = RemoteScoreBatch(misses, spec_);
  for (size_t k = 0; k < misses.size(); ++k) {
    if (cache_) {
      cache_->Put(RequestId(misses[k].premise, misses[k].hypothesis),
                  logits[k]);
    }
    out[miss_index[k]] = EntailProbability(logits[k]);
  }
  return out;
}

}  // namespace egraph
