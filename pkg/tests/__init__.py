# Empty file for pytest test discovery
