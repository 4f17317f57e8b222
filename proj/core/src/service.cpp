#include "valence/service.hpp"

#include <atomic>
#include <charconv>
#include <chrono>
#include <optional>
#include <stdexcept>
#include <thread>
#include <utility>

// The default listen backlog of 5 drops connections under bursts of
// concurrent clients; raise it before the header defines the constant.
#ifndef CPPHTTPLIB_LISTEN_BACKLOG
#define CPPHTTPLIB_LISTEN_BACKLOG 128
#endif
#include <httplib.h>
#include <nlohmann/json.hpp>

#include "valence/emotionml.hpp"
#include "valence/error.hpp"

namespace valence {
namespace {

using json = nlohmann::json;

double clock_seconds() {
    return std::chrono::duration<double>(
               std::chrono::system_clock::now().time_since_epoch())
        .count();
}

std::optional<double> parse_number(const std::string& text) {
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) return std::nullopt;
    return value;
}

void send_error(httplib::Response& res, int status, const std::string& message) {
    res.status = status;
    res.set_content(json{{"error", message}}.dump(), "application/json");
}

bool is_blank(const std::string& text) {
    for (char c : text) {
        if (c != ' ' && c != '\t' && c != '\r' && c != '\n') return false;
    }
    return true;
}

std::string emotionml_media_type(const httplib::Request& req) {
    const std::string accept = req.get_header_value("Accept");
    if (accept.empty() || accept.find("application/emotionml+xml") != std::string::npos ||
        accept.find("*/*") != std::string::npos) {
        return "application/emotionml+xml";
    }
    if (accept.find("application/xml") != std::string::npos) {
        return "application/xml";
    }
    return "application/emotionml+xml";
}

}  // namespace

struct Service::Impl {
    Analyzer analyzer;
    std::unique_ptr<Translator> translator;
    ServiceConfig config;
    ChannelRegistry channels;
    httplib::Server server;
    std::thread worker;
    std::atomic<bool> running{false};
    int bound_port = 0;

    Impl(Analyzer a, std::unique_ptr<Translator> t, ServiceConfig c)
        : analyzer(std::move(a)), translator(std::move(t)), config(std::move(c)) {
        install_routes();
    }

    // Shared request validation + analysis for /analyze and channel posts.
    // On failure an error response has been written and nullopt returned.
    std::optional<AnalysisResult> analyze_request(const httplib::Request& req,
                                                  httplib::Response& res) {
        const std::string engine_name =
            req.has_param("engine") ? req.get_param_value("engine") : "symbolic";
        const auto engine = engine_from_string(engine_name);
        if (!engine) {
            send_error(res, 400, "unknown engine '" + engine_name + "'");
            return std::nullopt;
        }
        if (req.body.size() > config.max_body_bytes) {
            send_error(res, 400,
                       "body exceeds " + std::to_string(config.max_body_bytes) + " bytes");
            return std::nullopt;
        }
        if (is_blank(req.body)) {
            send_error(res, 400, "empty body");
            return std::nullopt;
        }
        const std::string lang =
            req.has_param("lang") ? req.get_param_value("lang") : "en";

        std::string text;
        try {
            text = translator->translate(req.body, lang);
        } catch (const TranslationError& e) {
            send_error(res, 422, e.what());
            return std::nullopt;
        }
        try {
            return analyzer.analyze(text, *engine);
        } catch (const ModelUnavailableError& e) {
            send_error(res, 503, e.what());
            return std::nullopt;
        }
    }

    bool check_channel_id(const std::string& id, httplib::Response& res) const {
        if (id.empty() || id.size() > config.max_channel_id_bytes) {
            send_error(res, 400,
                       "channel id must be 1.." +
                           std::to_string(config.max_channel_id_bytes) + " bytes");
            return false;
        }
        return true;
    }

    void install_routes() {
        server.Post("/analyze", [this](const httplib::Request& req, httplib::Response& res) {
            const auto result = analyze_request(req, res);
            if (!result) return;
            res.set_content(serialize(analyzer.to_emotionml(*result)),
                            emotionml_media_type(req));
        });

        server.Post(R"(/channels/([^/]+)/messages)",
                    [this](const httplib::Request& req, httplib::Response& res) {
                        const std::string id = req.matches[1];
                        if (!check_channel_id(id, res)) return;

                        double timestamp = clock_seconds();
                        if (req.has_param("t")) {
                            const auto parsed = parse_number(req.get_param_value("t"));
                            if (!parsed) {
                                send_error(res, 400, "invalid timestamp");
                                return;
                            }
                            timestamp = *parsed;
                        }
                        const auto result = analyze_request(req, res);
                        if (!result) return;

                        Channel& channel = channels.channel(id);
                        channel.add_message(timestamp, result->document_valence.score,
                                            result->document_emotion.emotion);
                        res.set_content(json{{"status", "ok"},
                                             {"channel", id},
                                             {"count", channel.size()},
                                             {"timestamp", timestamp}}
                                            .dump(),
                                        "application/json");
                    });

        server.Get(R"(/channels/([^/]+)/gauge)",
                   [this](const httplib::Request& req, httplib::Response& res) {
                       const std::string id = req.matches[1];
                       if (!check_channel_id(id, res)) return;

                       double window = config.default_window;
                       if (req.has_param("window")) {
                           const auto parsed = parse_number(req.get_param_value("window"));
                           if (!parsed || *parsed <= 0.0) {
                               send_error(res, 400, "window must be a positive number");
                               return;
                           }
                           window = *parsed;
                       }
                       double now = clock_seconds();
                       if (req.has_param("now")) {
                           const auto parsed = parse_number(req.get_param_value("now"));
                           if (!parsed) {
                               send_error(res, 400, "invalid now value");
                               return;
                           }
                           now = *parsed;
                       }

                       GaugeReading reading;
                       EmotionHistogram histogram;
                       reading.window_begin = now - window;
                       reading.window_end = now;
                       if (const Channel* channel = channels.find(id)) {
                           reading = channel->gauge_value(window, now);
                           histogram = channel->dominant_emotion(window, now);
                       }

                       json counts;
                       for (std::size_t i = 0; i < kEmotionCount; ++i) {
                           counts[std::string(to_string(static_cast<EmotionLabel>(i)))] =
                               histogram.counts[i];
                       }
                       res.set_content(
                           json{{"channel", id},
                                {"window", window},
                                {"now", now},
                                {"mean", reading.mean},
                                {"gauge", (reading.mean + 1.0) / 2.0},
                                {"count", reading.count},
                                {"empty", reading.empty},
                                {"dominant", to_string(histogram.dominant)},
                                {"histogram", counts}}
                               .dump(),
                           "application/json");
                   });

        server.Get("/health", [](const httplib::Request&, httplib::Response& res) {
            res.set_content(json{{"status", "ok"}}.dump(), "application/json");
        });

        server.new_task_queue = [] { return new httplib::ThreadPool(32); };
    }
};

Service::Service(Analyzer analyzer, std::unique_ptr<Translator> translator,
                 ServiceConfig config)
    : impl_(std::make_unique<Impl>(std::move(analyzer), std::move(translator),
                                   std::move(config))) {}

Service::~Service() { stop(); }

int Service::start() {
    if (impl_->running) return impl_->bound_port;
    if (impl_->config.port == 0) {
        impl_->bound_port = impl_->server.bind_to_any_port(impl_->config.host);
        if (impl_->bound_port <= 0) {
            throw std::runtime_error("cannot bind to a free port on " + impl_->config.host);
        }
    } else {
        if (!impl_->server.bind_to_port(impl_->config.host, impl_->config.port)) {
            throw std::runtime_error("cannot bind to " + impl_->config.host + ":" +
                                     std::to_string(impl_->config.port));
        }
        impl_->bound_port = impl_->config.port;
    }
    impl_->worker = std::thread([this] { impl_->server.listen_after_bind(); });
    impl_->server.wait_until_ready();
    impl_->running = true;
    return impl_->bound_port;
}

void Service::stop() {
    if (!impl_ || !impl_->running) return;
    impl_->server.stop();
    if (impl_->worker.joinable()) impl_->worker.join();
    impl_->running = false;
}

bool Service::running() const { return impl_->running; }

const Analyzer& Service::analyzer() const { return impl_->analyzer; }

ChannelRegistry& Service::channels() { return impl_->channels; }

}  // namespace valence
