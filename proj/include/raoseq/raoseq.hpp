#pragma once

#include "raoseq/graph.hpp"
#include "raoseq/io.hpp"
#include "raoseq/isomorphism.hpp"
#include "raoseq/rao_order.hpp"
#include "raoseq/realization.hpp"
#include "raoseq/sequence.hpp"
#include "raoseq/wqo_harness.hpp"
