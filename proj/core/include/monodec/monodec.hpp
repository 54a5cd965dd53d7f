#pragma once

#include "alternation.hpp"
#include "certificate.hpp"
#include "circuit.hpp"
#include "circuit_to_tree.hpp"
#include "decision_list.hpp"
#include "decision_tree.hpp"
#include "decomposition.hpp"
#include "dyadic.hpp"
#include "families.hpp"
#include "inverters.hpp"
#include "io.hpp"
#include "netlist.hpp"
#include "nonadaptive.hpp"
#include "nondet.hpp"
#include "query.hpp"
#include "randomized.hpp"
#include "synthesis.hpp"
#include "truth_table.hpp"
