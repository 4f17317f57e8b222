#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <thread>
#include <vector>

#include "valence/aggregator.hpp"

using namespace valence;

namespace {

struct Probe {
    double window;
    double now;
};

// Scores land on a 1/64 grid so windowed sums are exact in double and the
// order messages were added in cannot change any reading.
std::vector<ChannelMessage> random_messages(std::size_t count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<ChannelMessage> messages;
    messages.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        ChannelMessage message;
        message.timestamp = static_cast<double>(rng() % 2000);
        message.score = static_cast<double>(static_cast<int>(rng() % 129) - 64) / 64.0;
        message.emotion = static_cast<EmotionLabel>(rng() % kEmotionCount);
        messages.push_back(message);
    }
    return messages;
}

std::vector<Probe> random_probes(std::size_t count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> window(0.5, 2200.0);
    std::uniform_real_distribution<double> now(-10.0, 2200.0);
    std::vector<Probe> probes;
    for (std::size_t i = 0; i < count; ++i) probes.push_back({window(rng), now(rng)});
    return probes;
}

GaugeReading brute_force(const std::vector<ChannelMessage>& messages, double window,
                         double now) {
    GaugeReading reading;
    reading.window_begin = now - window;
    reading.window_end = now;
    double sum = 0.0;
    for (const ChannelMessage& message : messages) {
        if (message.timestamp > now - window && message.timestamp <= now) {
            sum += message.score;
            ++reading.count;
        }
    }
    if (reading.count > 0) {
        reading.mean = sum / static_cast<double>(reading.count);
        reading.empty = false;
    }
    return reading;
}

}  // namespace

TEST_SUITE("aggregator") {

TEST_CASE("windowed mean matches a brute-force oracle over ten thousand messages") {
    const std::vector<ChannelMessage> messages = random_messages(10000, 99);
    Channel channel;
    for (const ChannelMessage& message : messages) channel.add_message(message);
    CHECK(channel.size() == messages.size());

    for (const Probe& probe : random_probes(100, 100)) {
        const GaugeReading expected = brute_force(messages, probe.window, probe.now);
        const GaugeReading actual = channel.gauge_value(probe.window, probe.now);
        CAPTURE(probe.window);
        CAPTURE(probe.now);
        CHECK(actual.count == expected.count);
        CHECK(actual.empty == expected.empty);
        CHECK(std::abs(actual.mean - expected.mean) <= 1e-9);
    }
}

TEST_CASE("insertion order never changes a reading") {
    const std::vector<ChannelMessage> messages = random_messages(2000, 5);
    const std::vector<Probe> probes = random_probes(100, 6);

    Channel in_order;
    for (const ChannelMessage& message : messages) in_order.add_message(message);

    for (std::uint64_t shuffle_seed : {1ULL, 2ULL, 3ULL}) {
        std::vector<ChannelMessage> shuffled = messages;
        std::mt19937_64 rng(shuffle_seed);
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        Channel channel;
        for (const ChannelMessage& message : shuffled) channel.add_message(message);

        for (const Probe& probe : probes) {
            const GaugeReading a = in_order.gauge_value(probe.window, probe.now);
            const GaugeReading b = channel.gauge_value(probe.window, probe.now);
            CHECK(a.count == b.count);
            CHECK(a.mean == b.mean);
            CHECK(a.empty == b.empty);
            const EmotionHistogram ha = in_order.dominant_emotion(probe.window, probe.now);
            const EmotionHistogram hb = channel.dominant_emotion(probe.window, probe.now);
            CHECK(ha.counts == hb.counts);
            CHECK(ha.dominant == hb.dominant);
        }
    }
}

TEST_CASE("window bounds are exclusive below and inclusive above") {
    Channel channel;
    channel.add_message(10.0, 1.0, EmotionLabel::Joy);
    channel.add_message(20.0, -1.0, EmotionLabel::Sadness);

    // (10, 20] keeps the right endpoint and drops the left one.
    const GaugeReading reading = channel.gauge_value(10.0, 20.0);
    CHECK(reading.count == 1);
    CHECK(reading.mean == -1.0);

    const GaugeReading both = channel.gauge_value(10.5, 20.0);
    CHECK(both.count == 2);
    CHECK(both.mean == 0.0);
}

TEST_CASE("an empty window reads as empty, not as an error") {
    Channel channel;
    const GaugeReading reading = channel.gauge_value(60.0, 100.0);
    CHECK(reading.empty);
    CHECK(reading.count == 0);
    CHECK(reading.mean == 0.0);
    CHECK(channel.dominant_emotion(60.0, 100.0).dominant == EmotionLabel::Neutral);
}

TEST_CASE("late arrivals are merged into timestamp order") {
    Channel channel;
    channel.add_message(100.0, 1.0, EmotionLabel::Joy);
    channel.add_message(50.0, -1.0, EmotionLabel::Sadness);  // arrives late
    const GaugeReading early = channel.gauge_value(30.0, 60.0);
    CHECK(early.count == 1);
    CHECK(early.mean == -1.0);
}

TEST_CASE("dominant emotion ties resolve in priority order, neutral last") {
    Channel channel;
    channel.add_message(1.0, 0.0, EmotionLabel::Surprise);
    channel.add_message(2.0, 0.0, EmotionLabel::Sadness);
    // 1:1 tie; sadness outranks surprise.
    CHECK(channel.dominant_emotion(10.0, 5.0).dominant == EmotionLabel::Sadness);

    channel.add_message(3.0, 0.0, EmotionLabel::Neutral);
    channel.add_message(4.0, 0.0, EmotionLabel::Neutral);
    // Two neutral votes beat the single emotional ones.
    const EmotionHistogram histogram = channel.dominant_emotion(10.0, 5.0);
    CHECK(histogram.dominant == EmotionLabel::Neutral);
    CHECK(histogram.counts[static_cast<std::size_t>(EmotionLabel::Neutral)] == 2);
}

TEST_CASE("capacity eviction drops the oldest message") {
    Channel channel(3);
    for (int i = 0; i < 5; ++i) {
        channel.add_message(static_cast<double>(i), 1.0, EmotionLabel::Joy);
    }
    CHECK(channel.size() == 3);
    CHECK(channel.gauge_value(1.5, 1.0).count == 0);   // 0 and 1 were evicted
    CHECK(channel.gauge_value(10.0, 10.0).count == 3);  // 2, 3, 4 remain
}

TEST_CASE("concurrent writer and readers stay consistent") {
    Channel channel;
    std::thread writer([&channel] {
        for (int i = 0; i < 5000; ++i) {
            channel.add_message(static_cast<double>(i), 1.0, EmotionLabel::Joy);
        }
    });
    double last_seen = 0.0;
    for (int round = 0; round < 200; ++round) {
        // Window (-10000, 10000] covers every timestamp including t=0.
        const GaugeReading reading = channel.gauge_value(20000.0, 10000.0);
        if (reading.count > 0) {
            CHECK(reading.mean == 1.0);  // every score is 1, any prefix averages to 1
        }
        CHECK(static_cast<double>(reading.count) >= last_seen);
        last_seen = static_cast<double>(reading.count);
    }
    writer.join();
    CHECK(channel.gauge_value(20000.0, 10000.0).count == 5000);
}

TEST_CASE("registry creates channels on demand and keeps them independent") {
    ChannelRegistry registry;
    CHECK(registry.find("a") == nullptr);
    registry.channel("a").add_message(1.0, 1.0, EmotionLabel::Joy);
    registry.channel("b").add_message(1.0, -1.0, EmotionLabel::Sadness);
    REQUIRE(registry.find("a") != nullptr);
    CHECK(registry.find("a")->gauge_value(10.0, 5.0).mean == 1.0);
    CHECK(registry.find("b")->gauge_value(10.0, 5.0).mean == -1.0);
    CHECK(registry.ids() == std::vector<std::string>{"a", "b"});
}

}  // TEST_SUITE
