HSEQd      L/m���;�L/m���;�L/m���;�L/m���;�L/m���;�L/m���;�L/m���;�L/m���;�L/m���;�L/m���;�L/m���;�L/m���;�L/m���;�L/m���;�L/m���;�L/m���;�L/m���;���Q?�؃���Q?�؃���Q?�؃���Q?�؃���Q?�؃���Q?�؃���Q?�؃���Q?�؃���Q?�؃���Q?�؃���Q?�؃���Q?�؃���Q?�؃���Q?�؃���Q?�؃���Q?�؃���Q?�؃���Q?�؃���Q?�؃���Q?�؃���Q?�؃���Q?�؃���Q?�؃���Q?�؃���Q?�؃���Q?�؃���Q?�؃���Q?�؃���Q?�؃���Q?�؃���Q?�؃���Q?�؃���Q?�؃���Q?�؃���Q?�؃���Q?�؃���Q?�؃���Q?�؃��~�?�\?�~�?�\?�~�?�\?�~�?�\?�~�?�\?�~�?�\?�~�?�\?�~�?�\?�~�?�\?�~�?�\?�~�?�\?j�Z����?j�Z����?j�Z����?j�Z����?j�Z����?j�Z����?j�Z����?j�Z����?j�Z����?j�Z����?j�Z����?j�Z����?j�Z����?j�Z����?j�Z����?j�Z����?j�Z����?j�Z����?j�Z����?j�Z����?j�Z����?j�Z����?j�Z����?j�Z����?j�Z����?j�Z����?j�Z����?j�Z����?j�Z����?j�Z����?j�Z����?j�Z����?j�Z����?j�Z����?