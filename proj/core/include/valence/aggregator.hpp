#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <memory>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <vector>

#include "valence/types.hpp"

namespace valence {

struct ChannelMessage {
    double timestamp = 0.0;  // seconds, arbitrary epoch
    double score = 0.0;      // valence in [-1,1]
    EmotionLabel emotion = EmotionLabel::Neutral;
};

struct GaugeReading {
    double mean = 0.0;
    std::size_t count = 0;
    double window_begin = 0.0;  // exclusive bound
    double window_end = 0.0;    // inclusive bound
    bool empty = true;
};

struct EmotionHistogram {
    std::array<std::size_t, kEmotionCount> counts{};
    EmotionLabel dominant = EmotionLabel::Neutral;
};

inline constexpr double kDefaultWindowSeconds = 300.0;

// Time-ordered message buffer for one feedback channel.  One writer and
// any number of readers may operate concurrently; distinct channels are
// fully independent.
class Channel {
  public:
    static constexpr std::size_t kDefaultCapacity = 10000;

    explicit Channel(std::size_t capacity = kDefaultCapacity) : capacity_(capacity) {}

    // Late arrivals are inserted in timestamp order; when the buffer is
    // full the oldest message is evicted.
    void add_message(double timestamp, double score, EmotionLabel emotion);
    void add_message(const ChannelMessage& message) {
        add_message(message.timestamp, message.score, message.emotion);
    }

    // Mean score of messages with timestamp in (now - window, now].
    GaugeReading gauge_value(double window, double now) const;

    // Histogram over the same window; ties resolved joy > sadness > anger
    // > fear > disgust > surprise, neutral last; empty window -> neutral.
    EmotionHistogram dominant_emotion(double window, double now) const;

    std::size_t size() const;

  private:
    mutable std::shared_mutex mutex_;
    std::vector<ChannelMessage> messages_;  // sorted by timestamp
    std::size_t capacity_;
};

class ChannelRegistry {
  public:
    explicit ChannelRegistry(std::size_t channel_capacity = Channel::kDefaultCapacity)
        : channel_capacity_(channel_capacity) {}

    // Creates the channel on first use.  The returned reference stays
    // valid for the registry's lifetime.
    Channel& channel(std::string_view id);

    const Channel* find(std::string_view id) const;
    std::vector<std::string> ids() const;

  private:
    mutable std::shared_mutex mutex_;
    std::map<std::string, std::unique_ptr<Channel>, std::less<>> channels_;
    std::size_t channel_capacity_;
};

}  // namespace valence
