#include "valence/aggregator.hpp"

#include <algorithm>
#include <mutex>

namespace valence {
namespace {

// First message with timestamp strictly greater than `bound`.
template <typename It>
It upper(It first, It last, double bound) {
    return std::upper_bound(first, last, bound, [](double value, const ChannelMessage& message) {
        return value < message.timestamp;
    });
}

}  // namespace

void Channel::add_message(double timestamp, double score, EmotionLabel emotion) {
    std::unique_lock lock(mutex_);
    // upper_bound keeps arrival order among equal timestamps
    const auto at = upper(messages_.begin(), messages_.end(), timestamp);
    messages_.insert(at, ChannelMessage{timestamp, score, emotion});
    if (messages_.size() > capacity_) {
        messages_.erase(messages_.begin());
    }
}

GaugeReading Channel::gauge_value(double window, double now) const {
    std::shared_lock lock(mutex_);
    GaugeReading reading;
    reading.window_begin = now - window;
    reading.window_end = now;

    const auto first = upper(messages_.begin(), messages_.end(), now - window);
    const auto last = upper(messages_.begin(), messages_.end(), now);
    double sum = 0.0;
    for (auto it = first; it != last; ++it) {
        sum += it->score;
        ++reading.count;
    }
    if (reading.count > 0) {
        reading.mean = sum / static_cast<double>(reading.count);
        reading.empty = false;
    }
    return reading;
}

EmotionHistogram Channel::dominant_emotion(double window, double now) const {
    std::shared_lock lock(mutex_);
    EmotionHistogram histogram;
    const auto first = upper(messages_.begin(), messages_.end(), now - window);
    const auto last = upper(messages_.begin(), messages_.end(), now);
    for (auto it = first; it != last; ++it) {
        histogram.counts[static_cast<std::size_t>(it->emotion)] += 1;
    }

    std::size_t best = 0;
    for (EmotionLabel label : kEmotionPriority) {
        const std::size_t count = histogram.counts[static_cast<std::size_t>(label)];
        if (count > best) {
            best = count;
            histogram.dominant = label;
        }
    }
    if (histogram.counts[static_cast<std::size_t>(EmotionLabel::Neutral)] > best) {
        histogram.dominant = EmotionLabel::Neutral;
    }
    return histogram;
}

std::size_t Channel::size() const {
    std::shared_lock lock(mutex_);
    return messages_.size();
}

Channel& ChannelRegistry::channel(std::string_view id) {
    {
        std::shared_lock lock(mutex_);
        const auto it = channels_.find(id);
        if (it != channels_.end()) return *it->second;
    }
    std::unique_lock lock(mutex_);
    auto& slot = channels_[std::string(id)];
    if (!slot) slot = std::make_unique<Channel>(channel_capacity_);
    return *slot;
}

const Channel* ChannelRegistry::find(std::string_view id) const {
    std::shared_lock lock(mutex_);
    const auto it = channels_.find(id);
    return it == channels_.end() ? nullptr : it->second.get();
}

std::vector<std::string> ChannelRegistry::ids() const {
    std::shared_lock lock(mutex_);
    std::vector<std::string> out;
    out.reserve(channels_.size());
    for (const auto& [id, channel] : channels_) out.push_back(id);
    return out;
}

}  // namespace valence
