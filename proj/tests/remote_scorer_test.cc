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
#include <chrono>
#include <filesystem>
#include <thread>

#include <gtest/gtest.h>

#include "egraph/errors.h"
#include "egraph/scorer.h"
#include "support/fake_nli_server.h"

namespace egraph {
namespace {

using json = nlohmann::json;
using testing::FakeNliServer;

ScorerSpec Spec(const FakeNliServer& server) {
  ScorerSpec spec;
  spec.kind = ScorerKind::kRemote;
  spec.location = server.url();
  spec.timeout_seconds = 5;
  return spec;
}

std::vector<SentencePair> Pairs(int n) {
  std::vector<SentencePair> out;
  for (int i = 0; i < n; ++i) {
    out.push_back({"Person A visits Location B" + std::to_string(i) + ".",
                   "Person A is in Location B" + std::to_string(i) + "."});
  }
  return out;
}

void ExpectMockLogits(const std::vector<SentencePair>& pairs,
                      const std::vector<NliLogits>& got) {
  ASSERT_EQ(pairs.size(), got.size());
  for (size_t i = 0; i < pairs.size(); ++i) {
    auto want = MockScorer::Logits(0, pairs[i].premise, pairs[i].hypothesis);
    EXPECT_EQ(got[i].entail, want.entail);
    EXPECT_EQ(got[i].contradict, want.contradict);
    EXPECT_EQ(got[i].neutral, want.neutral);
  }
}

TEST(RemoteScoreBatchTest, EmptyBatchSendsNothing) {
  FakeNliServer server(
      [](const std::vector<json>& rows, int) { return FakeNliServer::Answer(rows); });
  EXPECT_TRUE(RemoteScoreBatch({}, Spec(server)).empty());
  EXPECT_EQ(server.requests(), 0);
}

TEST(RemoteScoreBatchTest, OutOfOrderResponsesAreMatchedById) {
  FakeNliServer server([](std::vector<json> rows, int) {
    std::reverse(rows.begin(), rows.end());
    return FakeNliServer::Answer(rows);
  });
  auto pairs = Pairs(2);
  ExpectMockLogits(pairs, RemoteScoreBatch(pairs, Spec(server)));
  EXPECT_EQ(server.requests(), 1);
}

TEST(RemoteScoreBatchTest, PartialAnswerIsRetried) {
  FakeNliServer server([](std::vector<json> rows, int n) {
    if (n == 0) rows.pop_back();
    return FakeNliServer::Answer(rows);
  });
  auto pairs = Pairs(3);
  ExpectMockLogits(pairs, RemoteScoreBatch(pairs, Spec(server)));
  EXPECT_EQ(server.requests(), 2);
}

TEST(RemoteScoreBatchTest, RetryResendsOnlyMissingIds) {
  std::vector<size_t> sizes;
  FakeNliServer server([&](std::vector<json> rows, int n) {
    sizes.push_back(rows.size());
    if (n == 0) rows.erase(rows.begin());
    return FakeNliServer::Answer(rows);
  });
  RemoteScoreBatch(Pairs(3), Spec(server));
  EXPECT_EQ(sizes, (std::vector<size_t>{3, 1}));
}

TEST(RemoteScoreBatchTest, PersistentGapNamesTheMissingId) {
  FakeNliServer server([](std::vector<json> rows, int) {
    rows.pop_back();
    return FakeNliServer::Answer(rows);
  });
  auto pairs = Pairs(3);
  auto spec = Spec(server);
  spec.max_retries = 2;
  try {
    RemoteScoreBatch(pairs, spec);
    FAIL();
  } catch (const TransportError& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find(RequestId(pairs[2].premise, pairs[2].hypothesis)),
              std::string::npos)
        << msg;
    EXPECT_EQ(msg.find(RequestId(pairs[0].premise, pairs[0].hypothesis)),
              std::string::npos);
  }
  EXPECT_EQ(server.requests(), 3);
}

TEST(RemoteScoreBatchTest, LogitArraysFollowDeclaredLabels) {
  FakeNliServer server([](const std::vector<json>& rows, int) {
    std::string body = R"j({"labels":["neutral","entail","contradict"]})j";
    body += '\n';
    for (const auto& row : rows) {
      body += json{{"id", row["id"]}, {"logits", {0.5, 2.0, -1.0}}}.dump();
      body += '\n';
    }
    return body;
  });
  auto got = RemoteScoreBatch(Pairs(1), Spec(server));
  ASSERT_EQ(got.size(), 1u);
  EXPECT_EQ(got[0].entail, 2.0);
  EXPECT_EQ(got[0].contradict, -1.0);
  EXPECT_EQ(got[0].neutral, 0.5);
}

TEST(RemoteScoreBatchTest, MalformedResponsesCountAsFailedAttempts) {
  FakeNliServer server([](const std::vector<json>& rows, int n) {
    if (n == 0) return std::string("not json at all\n");
    if (n == 1) {
      std::string body = R"j({"labels":["entail","contradict","neutral"]})j";
      body += "\n{broken\n";
      for (const auto& row : rows) {
        body += json{{"id", row["id"]}, {"error", "overloaded"}}.dump() + "\n";
      }
      return body;
    }
    return FakeNliServer::Answer(rows);
  });
  auto pairs = Pairs(2);
  ExpectMockLogits(pairs, RemoteScoreBatch(pairs, Spec(server)));
  EXPECT_EQ(server.requests(), 3);
}

TEST(RemoteScoreBatchTest, NonFiniteLogitsAreRejected) {
  FakeNliServer server([](const std::vector<json>& rows, int) {
    std::string body = R"j({"labels":["entail","contradict","neutral"]})j";
    body += '\n';
    for (const auto& row : rows) {
      body += json{{"id", row["id"]}, {"entail", "nan"}, {"contradict", 0},
                   {"neutral", 0}}
                  .dump() +
              "\n";
    }
    return body;
  });
  auto spec = Spec(server);
  spec.max_retries = 0;
  EXPECT_THROW(RemoteScoreBatch(Pairs(1), spec), TransportError);
}

TEST(RemoteScoreBatchTest, DuplicatePairsAreSentOnceAndBatched) {
  std::vector<size_t> sizes;
  FakeNliServer server([&](const std::vector<json>& rows, int) {
    sizes.push_back(rows.size());
    return FakeNliServer::Answer(rows);
  });
  auto pairs = Pairs(5);
  pairs.push_back(pairs[0]);
  auto spec = Spec(server);
  spec.batch_size = 2;
  ExpectMockLogits(pairs, RemoteScoreBatch(pairs, spec));
  EXPECT_EQ(sizes, (std::vector<size_t>{2, 2, 1}));
}

TEST(RemoteScoreBatchTest, TimeoutRaisesTransportError) {
  FakeNliServer server([](const std::vector<json>& rows, int) {
    std::this_thread::sleep_for(std::chrono::milliseconds(600));
    return FakeNliServer::Answer(rows);
  });
  auto spec = Spec(server);
  spec.timeout_seconds = 0.2;
  spec.max_retries = 1;
  EXPECT_THROW(RemoteScoreBatch(Pairs(1), spec), TransportError);
}

TEST(RemoteScoreBatchTest, UnreachableEndpoint) {
  ScorerSpec spec;
  spec.kind = ScorerKind::kRemote;
  spec.location = "http://127.0.0.1:1";
  spec.timeout_seconds = 1;
  spec.max_retries = 0;
  EXPECT_THROW(RemoteScoreBatch(Pairs(1), spec), TransportError);
}

TEST(RequestIdTest, ContentHash) {
  EXPECT_EQ(RequestId("a", "b"), RequestId("a", "b"));
  EXPECT_NE(RequestId("a", "b"), RequestId("b", "a"));
  EXPECT_EQ(RequestId("a", "b").size(), 64u);
}

TEST(RemoteScorerTest, CacheAvoidsRepeatRequests) {
  FakeNliServer server(
      [](const std::vector<json>& rows, int) { return FakeNliServer::Answer(rows); });
  const auto cache = std::filesystem::temp_directory_path() /
                     "egraph_remote_cache.tsv";
  std::filesystem::remove(cache);
  auto spec = Spec(server);
  spec.cache_path = cache.string();
  auto p = ParsePredicate("(cure.1,cure.2,medicine,disease)");
  auto q = ParsePredicate("(treat.1,treat.2,medicine,disease)");
  std::vector<ScoreQuery> queries = {
      {&p, &q, "Medicine A cures Disease B.", "Medicine A treats Disease B."}};
  std::vector<std::optional<double>> first;
  {
    RemoteScorer scorer(spec);
    first = scorer.Score(queries);
  }
  EXPECT_EQ(server.requests(), 1);
  RemoteScorer again(spec);
  auto second = again.Score(queries);
  EXPECT_EQ(server.requests(), 1);
  EXPECT_EQ(first, second);
  EXPECT_EQ(*first[0], EntailProbability(MockScorer::Logits(
                           0, queries[0].premise_sentence,
                           queries[0].hypothesis_sentence)));
  std::filesystem::remove(cache);
}

}  // namespace
}  // namespace egraph
