#pragma once

#include "modcanon/errors.hpp"
#include "modcanon/graph.hpp"
#include "modcanon/representation.hpp"
#include "modcanon/modules.hpp"
#include "modcanon/decomposition.hpp"
#include "modcanon/canon.hpp"
#include "modcanon/cograph.hpp"
#include "modcanon/realizer.hpp"
#include "modcanon/colored.hpp"
#include "modcanon/canonize.hpp"
#include "modcanon/io.hpp"
#include "modcanon/generate.hpp"
