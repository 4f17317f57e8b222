#pragma once

#include <cstddef>
#include <memory>
#include <string>

#include "valence/aggregator.hpp"
#include "valence/analyzer.hpp"
#include "valence/translate.hpp"

namespace valence {

struct ServiceConfig {
    std::string host = "127.0.0.1";
    int port = 8080;  // 0 picks a free port
    double default_window = kDefaultWindowSeconds;
    std::size_t max_body_bytes = 64 * 1024;
    std::size_t max_channel_id_bytes = 128;
};

// HTTP front end.  Routes:
//   POST /analyze?engine=E&lang=L           text body -> EmotionML
//   POST /channels/{id}/messages?engine=E&t=SECS
//   GET  /channels/{id}/gauge?window=SECS[&now=SECS]
//   GET  /health
// Analysis resources are immutable after construction; channel state
// follows the aggregator's locking, so request handling is concurrent.
class Service {
  public:
    Service(Analyzer analyzer, std::unique_ptr<Translator> translator,
            ServiceConfig config = {});
    ~Service();

    Service(const Service&) = delete;
    Service& operator=(const Service&) = delete;

    // Binds, then serves on a background thread; returns the bound port.
    int start();
    void stop();
    bool running() const;

    const Analyzer& analyzer() const;
    ChannelRegistry& channels();

  private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

}  // namespace valence
