// Umbrella header; pulls the library in dependency order so the equality
// methods declared across headers are all defined.
#pragma once

#include "autocat/rational.hpp"
#include "autocat/matrix.hpp"
#include "autocat/object.hpp"
#include "autocat/morphism.hpp"
#include "autocat/model.hpp"
#include "autocat/mat_tensor.hpp"
#include "autocat/aff_direct_sum.hpp"
#include "autocat/net_sigma.hpp"
#include "autocat/signature.hpp"
#include "autocat/free_signature.hpp"
#include "autocat/diagram.hpp"
#include "autocat/diagram_io.hpp"
#include "autocat/rewrite.hpp"
#include "autocat/free_equal.hpp"
#include "autocat/functors.hpp"
#include "autocat/pregroup.hpp"
#include "autocat/render.hpp"
#include "autocat/random_gen.hpp"
