# Make src a package
