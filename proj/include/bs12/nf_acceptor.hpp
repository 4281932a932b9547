#pragma once

#include "bs12/counter_automaton.hpp"

namespace bs12 {

// A one-counter machine over {a, A, t, T} accepting exactly the normal forms.
// It is the union of finite acceptors for the E words and the short-run
// tables L1..L4, L1'..L4' with four machines for runs of three or more
// t-letters, one per family (X, N, P, PX). In those machines each t-letter
// of the run may count -1 or 0 and each t-letter outside the run counts +1,
// so the counter can return to zero exactly when the run is long enough.
CounterAutomaton build_nf_acceptor();

}  // namespace bs12
