HSEQd      !�?
cg�!�?
cg�!�?
cg�!�?
cg�!�?
cg�!�?
cg�!�?
cg�!�?
cg�!�?
cg�!�?
cg�!�?
cg�!�?
cg�!�?
cg�!�?
cg�!�?
cg�!�?
cg�!�?
cg�!�?
cg�!�?
cg�!�?
cg�!�?
cg�!�?
cg�!�?
cg�!�?
cg�!�?
cg�!�?
cg�!�?
cg�!�?
cg�!�?
cg�!�?
cg�!�?
cg�!�?
cg�!�?
cg��܀?]!�>�܀?]!�>�܀?]!�>�܀?]!�>�܀?]!�>�܀?]!�>�܀?]!�>�܀?]!�>�܀?]!�>�܀?]!�>�܀?]!�>�܀?]!�>�܀?]!�>�܀?]!�>�܀?]!�>�܀?]!�>�܀?]!�>E�AD�?E�AD�?E�AD�?E�AD�?E�AD�?E�AD�?E�AD�?E�AD�?E�AD�?E�AD�?E�AD�?E�AD�?E�AD�?E�AD�?�9���3���9���3���9���3���9���3���9���3���9���3���9���3���9���3���9���3���9���3���9���3���9���3���9���3���9���3���9���3���9���3���9���3���9���3���9���3���9���3���9���3���9���3���9���3���9���3���9���3���9���3���9���3���9���3���9���3���9���3���9���3���9���3���9���3���9���3���9���3���9���3��