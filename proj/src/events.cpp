#include "aegisnet/events.hpp"

#include <stdexcept>

namespace aegisnet {

void EventQueue::schedule(std::uint64_t time_ms, EventPayload payload) {
    if (time_ms < now_ms_) throw std::logic_error("event scheduled in the past");
    heap_.push(Event{time_ms, next_sequence_++, std::move(payload)});
}

std::optional<Event> EventQueue::pop() {
    if (heap_.empty()) return std::nullopt;
    Event ev = heap_.top();
    heap_.pop();
    now_ms_ = ev.time_ms;
    return ev;
}

}  // namespace aegisnet
